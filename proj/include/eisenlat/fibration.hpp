#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisenlat/error.hpp"

namespace eisenlat {

enum class KodairaType { II, III, IV, In, InStar, IVStar, IIIStar, IIStar };

struct KodairaFiber {
  KodairaType type = KodairaType::II;
  // b for I_b and I*_b; unused otherwise.
  int index = 0;

  int euler() const;
  std::string name() const;
  friend bool operator==(const KodairaFiber&, const KodairaFiber&) = default;
};

// Fiber of y^2 = x^3 + p12(t) over a root of multiplicity m:
// 1 -> II, 2 -> IV, 4 -> IV*, 5 -> II*. Throws OutsideFamily otherwise.
KodairaType kodaira_from_multiplicity(int m);

// Number of fixed curves of the automorphism inside a fiber. n_param is the
// parameter n of I_n (n in {3, 6, ..., 18}) and of I*_{n-5} (n in
// {5, 8, 11, 14, 17}). Throws UnsupportedType for types with no fixed-curve
// data (II, III) and for parameters outside those lists.
int fixed_curves_in_fiber(KodairaType type, std::optional<int> n_param = std::nullopt);

// Multiplicities (>= 2) of the multiple roots of p12, sorted descending; the
// remaining roots are simple.
struct FiberConfig {
  std::vector<int> multiplicities;

  int degree() const;
  int simple_roots() const { return 12 - degree(); }
  friend bool operator==(const FiberConfig&, const FiberConfig&) = default;
};

// Throws InvalidArgument for entries < 2 or total degree above 12.
FiberConfig make_fiber_config(std::vector<int> multiplicities);

// B / 2 - 1 with B the number of odd-multiplicity roots (y^2 = p12(t) is a
// double cover of P^1 branched there). Throws NegativeGenus when B < 2.
int genus_double_section(const FiberConfig& config);

struct ConfigAnalysis {
  std::vector<KodairaFiber> fibers;  // one per root, multiple roots first
  int n = 0;
  int k = 0;
  int genus = 0;
  bool valid = false;
  int euler_sum = 0;
  // section + double section + fixed curves in IV* and II* fibers
  int fixed_curves = 0;
};

// n = #doubles + 3 #IV* + 4 #II*, k = 2 + #IV* + 2 #II*. Throws OutsideFamily
// (multiplicity 3 or >= 6, more than two roots of multiplicity >= 4) and
// DegenerateSection ((n, k) outside the fixed-locus table, or B < 2).
ConfigAnalysis analyze_config(const FiberConfig& config);

struct ProfileResult {
  FiberConfig config;
  std::optional<ConfigAnalysis> analysis;
  std::optional<ErrorCode> rejection;
  std::string reason;
};

// Every multiset over {2, 4, 5} of total degree <= 12 with its analysis or
// rejection, ordered by the counts of 5s, 4s and 2s.
std::vector<ProfileResult> enumerate_profiles();

}  // namespace eisenlat
