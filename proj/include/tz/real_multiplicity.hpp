#pragma once

/// Signed lattice paths and their real multiplicity.
///
/// A sign is an element of Z2 x Z2, encoded as the 2-bit index
/// 2*first + second (0 = '+', 1 = '-'), so group addition is XOR. A step of
/// the path reduces mod 2 to a direction in the same group; the phase of a
/// step is the coset {s, s + direction} of its sign. Phases drive the
/// factors a(T) in {0, 1, 2, 4} of the corner-cutting recursion.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tz/complex_multiplicity.hpp"

namespace tz {

/// Raised when the case analysis meets a configuration it cannot resolve.
/// Never expected for valid inputs.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Sign {
  std::uint8_t first = 0;
  std::uint8_t second = 0;

  constexpr std::uint8_t index() const noexcept {
    return static_cast<std::uint8_t>((first & 1) << 1 | (second & 1));
  }
  static constexpr Sign from_index(std::uint8_t i) noexcept {
    return {static_cast<std::uint8_t>((i >> 1) & 1), static_cast<std::uint8_t>(i & 1)};
  }
  friend constexpr Sign operator+(Sign a, Sign b) noexcept {
    return from_index(a.index() ^ b.index());
  }
  friend constexpr bool operator==(Sign, Sign) = default;
};

inline constexpr Sign kPlusPlus{0, 0};
inline constexpr Sign kMinusPlus{1, 0};

class SignSequence {
 public:
  SignSequence() = default;
  explicit SignSequence(std::vector<Sign> signs) : signs_(std::move(signs)) {}
  SignSequence(std::size_t n, Sign fill) : signs_(n, fill) {}

  std::size_t size() const noexcept { return signs_.size(); }
  bool empty() const noexcept { return signs_.empty(); }
  const Sign& operator[](std::size_t i) const { return signs_[i]; }
  Sign& operator[](std::size_t i) { return signs_[i]; }
  auto begin() const noexcept { return signs_.begin(); }
  auto end() const noexcept { return signs_.end(); }
  std::span<const Sign> signs() const noexcept { return signs_; }

  /// Every sign translated by c.
  SignSequence shifted(Sign c) const {
    SignSequence out = *this;
    for (auto& s : out.signs_) s = s + c;
    return out;
  }

  friend bool operator==(const SignSequence&, const SignSequence&) = default;

 private:
  std::vector<Sign> signs_;
};

/// "-+,++,++": one two-character token per sign, first character is the
/// first coordinate.
inline std::string to_string(const SignSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i].first ? '-' : '+';
    out += s[i].second ? '-' : '+';
  }
  return out;
}

/// Inverse of to_string. Also accepts the Unicode minus sign U+2212.
inline SignSequence parse_sign_sequence(std::string_view text) {
  std::vector<Sign> signs;
  if (text.empty()) return SignSequence{};
  std::vector<std::uint8_t> bits;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad sign sequence \"" + std::string(text) + "\": " + why);
  };
  auto flush = [&] {
    if (bits.size() != 2) fail("each token needs exactly two signs");
    signs.push_back({bits[0], bits[1]});
    bits.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '+') {
      bits.push_back(0);
      ++i;
    } else if (c == '-') {
      bits.push_back(1);
      ++i;
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {
      bits.push_back(1);
      i += 3;
    } else if (c == ',') {
      flush();
      ++i;
    } else if (c == ' ') {
      ++i;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  flush();
  return SignSequence(std::move(signs));
}

/// Which sign coordinate couples to which lattice axis when a step is
/// reduced mod 2.
///  Transposed: a step (dx, dy) acts on signs as (X, Y) -> (X + dy, Y + dx);
///              this is the convention under which the explicit one- and
///              two-line sign sequences are maximal.
///  Direct:     (X, Y) -> (X + dx, Y + dy).
enum class PhaseConvention { Transposed, Direct };

inline constexpr PhaseConvention kDefaultConvention = PhaseConvention::Transposed;

/// Mod-2 reduction of a step, as a 2-bit group element.
constexpr std::uint8_t reduce_mod2(EdgeVector v, PhaseConvention convention) noexcept {
  const auto px = static_cast<std::uint8_t>(v.dx & 1);
  const auto py = static_cast<std::uint8_t>(v.dy & 1);
  return convention == PhaseConvention::Direct ? static_cast<std::uint8_t>(px << 1 | py)
                                               : static_cast<std::uint8_t>(py << 1 | px);
}

/// Coset of Z2^2 modulo the subgroup generated by `direction`.
struct PhaseClass {
  std::uint8_t members = 0;    ///< 4-bit mask, bit i set iff Sign::from_index(i) is in the class
  std::uint8_t direction = 0;  ///< 2-bit group element

  static constexpr PhaseClass of(Sign representative, std::uint8_t direction) noexcept {
    const auto r = representative.index();
    return {static_cast<std::uint8_t>(1u << r | 1u << (r ^ direction)), direction};
  }

  constexpr bool contains(Sign s) const noexcept { return members >> s.index() & 1; }
  constexpr int size() const noexcept { return std::popcount(static_cast<unsigned>(members)); }
  constexpr PhaseClass shifted(Sign c) const noexcept {
    std::uint8_t out = 0;
    for (std::uint8_t i = 0; i < 4; ++i)
      if (members >> i & 1) out |= static_cast<std::uint8_t>(1u << (i ^ c.index()));
    return {out, direction};
  }

  friend constexpr bool operator==(PhaseClass, PhaseClass) = default;
};

inline std::string to_string(PhaseClass c) {
  std::string out = "{";
  bool first = true;
  for (std::uint8_t i = 0; i < 4; ++i) {
    if (!(c.members >> i & 1)) continue;
    if (!first) out += ',';
    first = false;
    const auto s = Sign::from_index(i);
    out += s.first ? '-' : '+';
    out += s.second ? '-' : '+';
  }
  return out + "}";
}

inline PhaseClass phase_of(Sign sign, EdgeVector step,
                           PhaseConvention convention = kDefaultConvention) {
  if (step.is_zero()) throw std::invalid_argument("phase of a zero step");
  return PhaseClass::of(sign, reduce_mod2(step, convention));
}

struct PhasedPath {
  LatticePath path;
  std::vector<PhaseClass> phases;  ///< one per step
};

inline PhasedPath attach_phases(const LatticePath& path, const SignSequence& signs,
                                PhaseConvention convention = kDefaultConvention) {
  if (signs.size() != path.length())
    throw std::invalid_argument("sign sequence has " + std::to_string(signs.size()) +
                                " entries but the path has " +
                                std::to_string(path.length()) + " steps");
  PhasedPath out{path, {}};
  out.phases.reserve(signs.size());
  for (std::size_t j = 0; j < signs.size(); ++j)
    out.phases.push_back(phase_of(signs[j], path[j + 1] - path[j], convention));
  return out;
}

enum class TriangleCase {
  OddArea,         ///< a = 1, forced chord phase
  AllEvenEqual,    ///< a = 4, chord phase equals the side phase
  AllEvenUnequal,  ///< a = 0
  Disjoint,        ///< a = 0, the side phases share no sign
  OneEvenSide,     ///< a = 2, forced chord phase
  BaseOnlyEven,    ///< two chord phases, each with factor 1
};

inline std::string to_string(TriangleCase c) {
  switch (c) {
    case TriangleCase::OddArea: return "odd-area";
    case TriangleCase::AllEvenEqual: return "all-even-equal";
    case TriangleCase::AllEvenUnequal: return "all-even-unequal";
    case TriangleCase::Disjoint: return "disjoint";
    case TriangleCase::OneEvenSide: return "one-even-side";
    case TriangleCase::BaseOnlyEven: return "base-only-even";
  }
  return "?";
}

struct CaseOutcome {
  TriangleCase kind;
  int factor;                           ///< a(T), applied to each branch
  std::vector<PhaseClass> new_phases;   ///< chord phase per branch; empty when factor is 0
};

/// Case analysis for the corner triangle T = (gamma(k-1), gamma(k),
/// gamma(k+1)) whose two path sides carry phases sigma_k and sigma_k1.
inline CaseOutcome classify_triangle(const std::array<LatticePoint, 3>& T, PhaseClass sigma_k,
                                     PhaseClass sigma_k1) {
  const EdgeVector first = T[1] - T[0];
  const EdgeVector second = T[2] - T[1];
  if (first.is_zero() || second.is_zero())
    throw InconsistencyError("degenerate corner triangle");
  if (is_even(first) != (sigma_k.direction == 0) || is_even(second) != (sigma_k1.direction == 0))
    throw InconsistencyError("phase directions do not match the triangle sides");

  const auto chord_dir = static_cast<std::uint8_t>(sigma_k.direction ^ sigma_k1.direction);
  const auto common = static_cast<std::uint8_t>(sigma_k.members & sigma_k1.members);
  const bool first_even = is_even(first);
  const bool second_even = is_even(second);

  // The two chord classes partition Z2^2 (or are the four singletons).
  std::vector<PhaseClass> chord_classes;
  for (std::uint8_t i = 0; i < 4; ++i) {
    auto c = PhaseClass::of(Sign::from_index(i), chord_dir);
    if (std::find(chord_classes.begin(), chord_classes.end(), c) == chord_classes.end())
      chord_classes.push_back(c);
  }
  auto unique = [](std::vector<PhaseClass> found, const char* what) {
    if (found.size() != 1)
      throw InconsistencyError(std::string("no unique chord phase in case ") + what);
    return found;
  };

  if (twice_area(T[0], T[1], T[2]) % 2 == 1) {
    std::vector<PhaseClass> found;
    for (auto c : chord_classes)
      if ((c.members & common) == 0) found.push_back(c);
    return {TriangleCase::OddArea, 1, unique(std::move(found), "odd-area")};
  }
  if (first_even && second_even) {
    if (sigma_k == sigma_k1) return {TriangleCase::AllEvenEqual, 4, {sigma_k}};
    return {TriangleCase::AllEvenUnequal, 0, {}};
  }
  if (common == 0) return {TriangleCase::Disjoint, 0, {}};

  std::vector<PhaseClass> meeting;
  for (auto c : chord_classes)
    if ((c.members & sigma_k.members) && (c.members & sigma_k1.members)) meeting.push_back(c);
  if (first_even || second_even)
    return {TriangleCase::OneEvenSide, 2, unique(std::move(meeting), "one-even-side")};

  if (meeting.size() != 2) throw InconsistencyError("base-only-even case needs two chord phases");
  std::sort(meeting.begin(), meeting.end(),
            [](PhaseClass a, PhaseClass b) { return a.members < b.members; });
  return {TriangleCase::BaseOnlyEven, 1, std::move(meeting)};
}

namespace detail {

inline std::int64_t mu_real_side(const LatticePath& path, const std::vector<PhaseClass>& phases,
                                 Side side) {
  if (is_supported_on_chain(path, side)) return 1;
  const auto k = find_pivot(path, side);
  if (!k) return 0;
  const std::array<LatticePoint, 3> T{path[*k - 1], path[*k], path[*k + 1]};
  const auto outcome = classify_triangle(T, phases[*k - 1], phases[*k]);
  if (outcome.factor == 0) return 0;

  const LatticePath shorter = cut_corner(path, *k);
  std::int64_t total = 0;
  for (auto chord_phase : outcome.new_phases) {
    std::vector<PhaseClass> next;
    next.reserve(phases.size() - 1);
    next.insert(next.end(), phases.begin(), phases.begin() + static_cast<std::ptrdiff_t>(*k - 1));
    next.push_back(chord_phase);
    next.insert(next.end(), phases.begin() + static_cast<std::ptrdiff_t>(*k + 1), phases.end());
    total += mu_real_side(shorter, next, side);
  }
  return outcome.factor * total;
}

}  // namespace detail

inline std::int64_t mu_real_side(const PhasedPath& pp, Side side) {
  if (pp.phases.size() != pp.path.length())
    throw std::invalid_argument("phased path needs one phase per step");
  return detail::mu_real_side(pp.path, pp.phases, side);
}

inline std::int64_t mu_real(const LatticePath& path, const SignSequence& signs,
                            PhaseConvention convention = kDefaultConvention) {
  const auto pp = attach_phases(path, signs, convention);
  const auto plus = mu_real_side(pp, Side::Plus);
  if (plus == 0) return 0;
  return plus * mu_real_side(pp, Side::Minus);
}

inline std::size_t maximal_path_length(int degree, std::size_t conditions) {
  return static_cast<std::size_t>(degree) * static_cast<std::size_t>(degree + 3) / 2 - conditions;
}

namespace detail {

/// First d-1 entries alternate and end on (+,+); the rest are (+,+).
inline SignSequence alternating_prefix(int d, std::size_t length) {
  SignSequence out(length, kPlusPlus);
  const auto prefix = static_cast<std::size_t>(d - 1);
  for (std::size_t i = 0; i < prefix && i < length; ++i)
    if ((prefix - 1 - i) % 2 == 1) out[i] = kMinusPlus;
  return out;
}

}  // namespace detail

/// Sign sequences of length d(d+3)/2 - 1 for one tangency: all (+,+) for the
/// hypotenuse; for the vertical edge, (+,+) except an alternating prefix of
/// d-1 entries that starts with (-,+) for odd d and (+,+) for even d.
inline SignSequence ronga_sign_sequence(int d, BoundaryEdge axis) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  const auto n = maximal_path_length(d, 1);
  switch (axis) {
    case BoundaryEdge::Hypotenuse: return SignSequence(n, kPlusPlus);
    case BoundaryEdge::Vertical: return detail::alternating_prefix(d, n);
    case BoundaryEdge::Bottom: break;
  }
  throw std::invalid_argument("no one-line sign sequence for the bottom edge");
}

/// The vertical one-line sequence truncated to d(d+3)/2 - 2 entries.
inline SignSequence theorem_sign_sequence(int d) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  return detail::alternating_prefix(d, maximal_path_length(d, 2));
}

}  // namespace tz
