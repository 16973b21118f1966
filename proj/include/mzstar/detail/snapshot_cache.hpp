#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>

namespace mzstar::detail {

// Holds an immutable table covering indices [0, size) and swaps in a larger
// one on demand. Readers keep the shared_ptr they got, so every entry they
// can see is fully computed; growth is serialized by the mutex.
//
// Table must provide `std::size_t size() const` and a constructor from the
// requested size.
template <typename Table>
class SnapshotCache {
 public:
  std::shared_ptr<const Table> at_least(std::size_t size) {
    auto current = std::atomic_load(&table_);
    if (current && current->size() >= size) return current;

    std::lock_guard lock(mutex_);
    current = std::atomic_load(&table_);
    if (current && current->size() >= size) return current;
    // grow at least geometrically
    const std::size_t target = std::max(size, current ? 2 * current->size() : size);
    auto grown = std::make_shared<const Table>(target);
    std::atomic_store(&table_, grown);
    return grown;
  }

 private:
  std::mutex mutex_;
  std::shared_ptr<const Table> table_;
};

}  // namespace mzstar::detail
