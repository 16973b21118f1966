#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mzstar {

/// Argument string of an MZV/MZSV. Positive entries are ordinary exponents,
/// a negative entry -s stands for the overlined (alternating) s-bar.
struct Index {
  std::vector<int> entries;

  std::size_t depth() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  long weight() const;
  /// Convergent unless the leading entry is a plain 1.
  bool admissible() const { return entries.empty() || entries.front() != 1; }

  friend bool operator==(const Index&, const Index&) = default;
};

/// Upper bound on the number of entries a parsed expression may expand to.
inline constexpr std::size_t kMaxIndexLength = 1u << 20;

/// Grammar (whitespace between tokens is ignored):
///   index := term { "," term }
///   term  := atom | "{" index "}" [ "^" nat ]
///   atom  := nat | "-" nat
/// Repetition blocks expand eagerly and may nest; "^0" expands to nothing
/// and a block without exponent stands for itself.
/// The empty string is the empty index. Throws ParseError.
Index parse_index(std::string_view text);

/// Runs of two or more equal entries are written "{s}^n"; longer blocks are
/// never folded. parse_index(render_index(ix)) == ix.
std::string render_index(const Index& ix);

enum class Family {
  kEmpty,
  kTwos,                 // {2}^d
  kThreeOne,             // {3,1}^d
  kThreeOneTwo,          // {3,1}^d, 2
  kTwoThreeTwoOne,       // {{2}^m,3,{2}^m,1}^d, m >= 1
  kTwoThreeTwoOneTail,   // {{2}^m,3,{2}^m,1}^d, {2}^{m+1}, m >= 1
  kGeneric,
};

struct Classification {
  Family family = Family::kGeneric;
  int d = 0;
  int m = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Most specific family wins: [3,1] is (31, d=1) rather than (2321, m=0),
/// and [2] is ({2}^1) rather than ({3,1}^0, 2).
Classification classify(const Index& ix);

/// "empty", "2", "31", "312", "2321", "2321tail" or "generic".
std::string family_tag(Family f);

/// {{2}^m,3,{2}^m,1}^d, optionally followed by {2}^{m+1}. With m = 0 this
/// is {3,1}^d (and {3,1}^d,2).
Index three_two_one_index(int d, int m, bool tail);

}  // namespace mzstar
