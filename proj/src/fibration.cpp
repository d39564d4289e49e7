#include "eisenlat/fibration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "eisenlat/classification.hpp"

namespace eisenlat {

int KodairaFiber::euler() const {
  switch (type) {
    case KodairaType::II: return 2;
    case KodairaType::III: return 3;
    case KodairaType::IV: return 4;
    case KodairaType::In: return index;
    case KodairaType::InStar: return index + 6;
    case KodairaType::IVStar: return 8;
    case KodairaType::IIIStar: return 9;
    case KodairaType::IIStar: return 10;
  }
  return 0;
}

std::string KodairaFiber::name() const {
  switch (type) {
    case KodairaType::II: return "II";
    case KodairaType::III: return "III";
    case KodairaType::IV: return "IV";
    case KodairaType::In: return "I" + std::to_string(index);
    case KodairaType::InStar: return "I*" + std::to_string(index);
    case KodairaType::IVStar: return "IV*";
    case KodairaType::IIIStar: return "III*";
    case KodairaType::IIStar: return "II*";
  }
  return "?";
}

KodairaType kodaira_from_multiplicity(int m) {
  switch (m) {
    case 1: return KodairaType::II;
    case 2: return KodairaType::IV;
    case 4: return KodairaType::IVStar;
    case 5: return KodairaType::IIStar;
    default: break;
  }
  fail(ErrorCode::OutsideFamily,
       "roots of multiplicity " + std::to_string(m) + " do not occur in y^2 = x^3 + p12(t) families");
}

int fixed_curves_in_fiber(KodairaType type, std::optional<int> n_param) {
  switch (type) {
    case KodairaType::IV:
    case KodairaType::IVStar: return 1;
    case KodairaType::IIIStar: return 3;
    case KodairaType::IIStar: return 2;
    case KodairaType::In:
      if (n_param && *n_param >= 3 && *n_param <= 18 && *n_param % 3 == 0) return *n_param / 3;
      fail(ErrorCode::UnsupportedType, "I_n needs n in {3, 6, ..., 18}");
    case KodairaType::InStar:
      if (n_param && *n_param >= 5 && *n_param <= 17 && *n_param % 3 == 2)
        return (*n_param - 2) / 3;
      fail(ErrorCode::UnsupportedType, "I*_{n-5} needs n in {5, 8, 11, 14, 17}");
    case KodairaType::II:
    case KodairaType::III: break;
  }
  fail(ErrorCode::UnsupportedType, "no fixed-curve data for this fiber type");
}

int FiberConfig::degree() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

FiberConfig make_fiber_config(std::vector<int> multiplicities) {
  for (int m : multiplicities)
    if (m < 2) fail(ErrorCode::InvalidArgument, "listed multiplicities must be >= 2");
  std::sort(multiplicities.begin(), multiplicities.end(), std::greater<>());
  FiberConfig c{std::move(multiplicities)};
  if (c.degree() > 12) fail(ErrorCode::InvalidArgument, "total degree exceeds 12");
  return c;
}

int genus_double_section(const FiberConfig& config) {
  int branch = config.simple_roots();
  for (int m : config.multiplicities)
    if (m % 2 == 1) ++branch;
  if (branch < 2)
    fail(ErrorCode::NegativeGenus, "double cover with " + std::to_string(branch) +
                                       " branch points is not a curve of genus >= 0");
  return branch / 2 - 1;
}

ConfigAnalysis analyze_config(const FiberConfig& config) {
  ConfigAnalysis out;
  int doubles = 0, fours = 0, fives = 0;
  for (int m : config.multiplicities) {
    out.fibers.push_back({kodaira_from_multiplicity(m), 0});
    if (m == 2) ++doubles;
    if (m == 4) ++fours;
    if (m == 5) ++fives;
  }
  if (fours + fives > 2)
    fail(ErrorCode::OutsideFamily, "more than two roots of multiplicity >= 4");
  for (int i = 0; i < config.simple_roots(); ++i) out.fibers.push_back({KodairaType::II, 0});

  out.n = doubles + 3 * fours + 4 * fives;
  out.k = 2 + fours + 2 * fives;
  if (!in_table1(out.n, out.k))
    fail(ErrorCode::DegenerateSection, "(n, k) = (" + std::to_string(out.n) + ", " +
                                           std::to_string(out.k) +
                                           ") is not a fixed-locus type; the double section is reducible");
  try {
    out.genus = genus_double_section(config);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NegativeGenus) throw;
    fail(ErrorCode::DegenerateSection, std::string("double section degenerates: ") + e.what());
  }
  out.valid = out.genus == 3 + out.k - out.n;
  out.fixed_curves = 2;
  for (const auto& f : out.fibers) {
    out.euler_sum += f.euler();
    if (f.type == KodairaType::IVStar || f.type == KodairaType::IIStar)
      out.fixed_curves += fixed_curves_in_fiber(f.type);
  }
  return out;
}

std::vector<ProfileResult> enumerate_profiles() {
  std::vector<ProfileResult> out;
  for (int v = 0; 5 * v <= 12; ++v)
    for (int f = 0; 5 * v + 4 * f <= 12; ++f)
      for (int d = 0; 5 * v + 4 * f + 2 * d <= 12; ++d) {
        std::vector<int> mults(v, 5);
        mults.insert(mults.end(), f, 4);
        mults.insert(mults.end(), d, 2);
        ProfileResult r{make_fiber_config(std::move(mults)), std::nullopt, std::nullopt, {}};
        try {
          r.analysis = analyze_config(r.config);
        } catch (const Error& e) {
          r.rejection = e.code();
          r.reason = e.what();
        }
        out.push_back(std::move(r));
      }
  return out;
}

}  // namespace eisenlat
