#include "mzstar/index.hpp"

#include <cctype>
#include <limits>

#include "mzstar/errors.hpp"

namespace mzstar {

long Index::weight() const {
  long w = 0;
  for (int s : entries) w += s < 0 ? -static_cast<long>(s) : s;
  return w;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Index run() {
    Index ix;
    skip_space();
    if (pos_ == text_.size()) return ix;
    parse_list(ix.entries);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return ix;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void parse_list(std::vector<int>& out) {
    parse_term(out);
    while (peek(',')) {
      ++pos_;
      parse_term(out);
    }
  }

  void parse_term(std::vector<int>& out) {
    if (peek('{')) {
      ++pos_;
      std::vector<int> block;
      parse_list(block);
      expect('}');
      long reps = 1;  // "{3,1}" is read as "{3,1}^1"
      if (peek('^')) {
        ++pos_;
        reps = parse_nat(true);
      }
      if (!block.empty() && static_cast<std::size_t>(reps) > (kMaxIndexLength - out.size()) / block.size()) {
        fail("expansion exceeds " + std::to_string(kMaxIndexLength) + " entries");
      }
      for (long r = 0; r < reps; ++r) out.insert(out.end(), block.begin(), block.end());
      return;
    }
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    const long v = parse_nat(false);
    if (v == 0) throw ParseError("zero entry", start);
    if (v > std::numeric_limits<int>::max()) throw ParseError("entry too large", start);
    if (out.size() >= kMaxIndexLength) fail("expansion exceeds " + std::to_string(kMaxIndexLength) + " entries");
    out.push_back(negative ? -static_cast<int>(v) : static_cast<int>(v));
  }

  long parse_nat(bool exponent) {
    skip_space();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<long>::max() - 9) / 10) throw ParseError("number too large", start);
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail(exponent ? "expected repetition count" : "expected a number");
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Index parse_index(std::string_view text) { return Parser(text).run(); }

std::string render_index(const Index& ix) {
  std::string out;
  const auto& e = ix.entries;
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i;
    while (j < e.size() && e[j] == e[i]) ++j;
    if (!out.empty()) out += ',';
    if (j - i >= 2) {
      out += '{' + std::to_string(e[i]) + "}^" + std::to_string(j - i);
    } else {
      out += std::to_string(e[i]);
    }
    i = j;
  }
  return out;
}

Index three_two_one_index(int d, int m, bool tail) {
  Index ix;
  for (int k = 0; k < d; ++k) {
    ix.entries.insert(ix.entries.end(), static_cast<std::size_t>(m), 2);
    ix.entries.push_back(3);
    ix.entries.insert(ix.entries.end(), static_cast<std::size_t>(m), 2);
    ix.entries.push_back(1);
  }
  if (tail) ix.entries.insert(ix.entries.end(), static_cast<std::size_t>(m) + 1, 2);
  return ix;
}

Classification classify(const Index& ix) {
  const auto& e = ix.entries;
  if (e.empty()) return {Family::kEmpty, 0, 0};

  std::size_t lead = 0;
  while (lead < e.size() && e[lead] == 2) ++lead;
  if (lead == e.size()) return {Family::kTwos, static_cast<int>(e.size()), 0};

  // The number of leading 2's fixes m; then the shape is forced.
  const std::size_t m = lead;
  const std::size_t block = 2 * m + 2;
  const std::size_t tail = (e.size() % block == m + 1) ? m + 1 : 0;
  if ((e.size() - tail) % block != 0 || e.size() < block + tail) return {Family::kGeneric, 0, 0};
  const int d = static_cast<int>((e.size() - tail) / block);
  if (three_two_one_index(d, static_cast<int>(m), tail != 0) != ix) return {Family::kGeneric, 0, 0};

  if (m == 0) return {tail ? Family::kThreeOneTwo : Family::kThreeOne, d, 0};
  return {tail ? Family::kTwoThreeTwoOneTail : Family::kTwoThreeTwoOne, d, static_cast<int>(m)};
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::kEmpty: return "empty";
    case Family::kTwos: return "2";
    case Family::kThreeOne: return "31";
    case Family::kThreeOneTwo: return "312";
    case Family::kTwoThreeTwoOne: return "2321";
    case Family::kTwoThreeTwoOneTail: return "2321tail";
    case Family::kGeneric: return "generic";
  }
  return "generic";
}

}  // namespace mzstar
