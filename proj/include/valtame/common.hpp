#ifndef VALTAME_COMMON_HPP
#define VALTAME_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace valtame {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error taxonomy; CLI exit codes depend on these categories.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a predicate cannot be decided at the current truncation depth.
// Callers may retry with more precision; guessing is never an option.
class precision_error : public error {
 public:
  explicit precision_error(const std::string& msg) : error("precision-indeterminate: " + msg) {}
};

// Raised when a configured cap (degree, branching, iterations) is exceeded.
class cap_error : public error {
 public:
  explicit cap_error(const std::string& msg) : error("cap-exceeded: " + msg) {}
};

// Raised on inputs outside the supported fragment.
class unsupported_error : public error {
 public:
  explicit unsupported_error(const std::string& msg) : error("unsupported-fragment: " + msg) {}
};

class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t pos)
      : error("parse error at " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

class domain_error : public error {
 public:
  explicit domain_error(const std::string& msg) : error("domain error: " + msg) {}
};

enum class Mode { rcvf, acvf, overconvergent };

inline std::string mode_name(Mode m) {
  switch (m) {
    case Mode::rcvf: return "rcvf";
    case Mode::acvf: return "acvf";
    case Mode::overconvergent: return "overconvergent";
  }
  return "?";
}

inline std::optional<Mode> mode_from_name(const std::string& s) {
  if (s == "rcvf") return Mode::rcvf;
  if (s == "acvf") return Mode::acvf;
  if (s == "overconvergent") return Mode::overconvergent;
  return std::nullopt;
}

// Global knobs. Every value has a documented default; reports echo the
// configuration they ran under.
struct Config {
  Mode mode = Mode::rcvf;
  Rat precision = 10;        // residual depth / truncation target (additive valuation)
  int max_degree = 8;        // polynomial degree cap for root expansion
  int coeff_degree_cap = 16; // degree cap for real algebraic coefficient arithmetic
  int grid_denom = 4;        // exponent denominator bound for grid sampling
  int dnf_cap = 4096;        // clause cap for DNF expansion
  int theta_cap = 6;         // |I2| cap for the sign-bookkeeping split (2^6 branches)
  std::uint64_t seed = 421;  // seed for seeded property sampling (VALTAME_SEED)
};

inline int sign_of(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

inline std::string rat_str(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
inline std::optional<Rat> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num) / Rat(den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline Int rat_floor(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

}  // namespace valtame

#endif
