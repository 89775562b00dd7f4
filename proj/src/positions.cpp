#include "ppbench/positions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ppbench/errors.hpp"

namespace ppbench {

namespace {

struct CatalogueEntry {
  FormulaId id;
  const char* name;
  const char* label;
};

constexpr CatalogueEntry kCatalogue[] = {
    {FormulaId::Hazen, "hazen", "Hazen (1914)-Foster (1936)"},
    {FormulaId::Beard, "beard", "Beard (1943)"},
    {FormulaId::Blom, "blom", "Blom (1958)"},
    {FormulaId::Tukey, "tukey", "Tukey (1962)"},
    {FormulaId::Gringorten, "gringorten", "Gringorten (1963)"},
    {FormulaId::YuHuangNormal, "yu-huang-a", "Yu and Huang (1999) (a)"},
    {FormulaId::YuHuangGumbel, "yu-huang-b", "Yu and Huang (1999) (b)"},
    {FormulaId::De, "de", "De (2000)"},
    {FormulaId::Weibull, "weibull", "Weibull"},
    {FormulaId::Cunnane, "cunnane", "Cunnane (1978)"},
    {FormulaId::Adamowski, "adamowski", "Adamowski (1981)"},
    {FormulaId::Kerman, "kerman", "Kerman (2011)"},
    {FormulaId::ErtoLepore2013, "erto-lepore-2013", "Erto and Lepore (2013)"},
};

const CatalogueEntry& entry(FormulaId id) {
  for (const auto& e : kCatalogue) {
    if (e.id == id) return e;
  }
  throw DomainError("formula has no catalogue entry");
}

// Beta-median approximation A(N) = N + (N-1)/(2^{1/N} - 2), about 0.30 for
// every N. 2^{1/N} - 2 is formed as expm1(ln2/N) - 1 to avoid cancellation;
// N = 1 takes the limit 1 - 1/(2 ln 2).
double erto_lepore_a(int size) {
  if (size == 1) return 1.0 - 1.0 / (2.0 * std::numbers::ln2);
  const double n = size;
  return n + (n - 1.0) / (std::expm1(std::numbers::ln2 / n) - 1.0);
}

}  // namespace

PositionFormula PositionFormula::classical(FormulaId id) {
  if (id == FormulaId::Proposed) throw DomainError("Proposed is not a classical rule");
  PositionFormula f;
  f.id = id;
  return f;
}

PositionFormula PositionFormula::proposed(Family family, int order, CovMode mode) {
  if (order < 0 || order > 4) {
    throw UnsupportedOrder("expansion order must be in 0..4, got " + std::to_string(order));
  }
  PositionFormula f;
  f.id = FormulaId::Proposed;
  f.family = family == Family::LogNormal3 ? Family::Normal : family;
  f.order = order;
  f.means_mode = mode;
  return f;
}

std::string PositionFormula::name() const {
  if (!is_proposed()) return entry(id).name;
  if (means_mode == CovMode::Exact) return "proposed-exact";
  return "proposed-k" + std::to_string(order);
}

std::string PositionFormula::label() const {
  if (!is_proposed()) return entry(id).label;
  if (means_mode == CovMode::Exact) return "Proposed (exact means)";
  return "Proposed (k = " + std::to_string(order) + ")";
}

PositionFormula parse_formula(std::string_view name, Family family, int order) {
  if (name == "proposed") return PositionFormula::proposed(family, order);
  if (name == "proposed-exact") return PositionFormula::proposed(family, order, CovMode::Exact);
  if (name.starts_with("proposed-k") && name.size() == 11) {
    return PositionFormula::proposed(family, name.back() - '0');
  }
  for (const auto& e : kCatalogue) {
    if (name == e.name) return PositionFormula::classical(e.id);
  }
  throw DomainError("unknown plotting-position formula '" + std::string(name) + "'");
}

std::vector<FormulaId> classical_catalogue() {
  std::vector<FormulaId> ids;
  for (const auto& e : kCatalogue) ids.push_back(e.id);
  return ids;
}

PlottingConstants plotting_constants(FormulaId id, int size) {
  auto blom_form = [](double a) { return PlottingConstants{a, 1.0 - 2.0 * a}; };
  switch (id) {
    case FormulaId::Hazen:
      return blom_form(0.5);
    case FormulaId::Beard:
      return blom_form(0.31);
    case FormulaId::Blom:
      return blom_form(3.0 / 8.0);
    case FormulaId::Tukey:
    case FormulaId::Kerman:
      return blom_form(1.0 / 3.0);
    case FormulaId::Gringorten:
      return blom_form(0.44);
    case FormulaId::YuHuangNormal:
      return {0.399, 0.203};
    case FormulaId::YuHuangGumbel:
      return {0.507, 0.176};
    case FormulaId::De:
      return {0.28, 0.28};
    case FormulaId::Weibull:
      return blom_form(0.0);
    case FormulaId::Cunnane:
      return blom_form(0.4);
    case FormulaId::Adamowski:
      return blom_form(0.25);
    case FormulaId::ErtoLepore2013:
      return blom_form(erto_lepore_a(size));
    case FormulaId::Proposed:
      break;
  }
  throw DomainError("proposed positions have no (A, B) constants");
}

PositionSet classical_positions(const PositionFormula& formula, int size) {
  if (formula.is_proposed()) throw DomainError("classical_positions called with a proposed formula");
  if (size < 1) throw DomainError("sample size must be >= 1");
  const auto [a, b] = plotting_constants(formula.id, size);
  PositionSet set{size, std::vector<double>(size), formula};
  for (int i = 1; i <= size; ++i) {
    const double p = (i - a) / (size + b);
    if (!(p > 0.0 && p < 1.0)) {
      throw InvalidPositions(formula.name() + ": p_" + std::to_string(i) + " = " +
                             std::to_string(p) + " outside (0,1)");
    }
    set.p[i - 1] = p;
  }
  return set;
}

PositionSet proposed_positions(Family family, int size, int order, CovMode mode) {
  const auto formula = PositionFormula::proposed(family, order, mode);
  if (size < 1) throw DomainError("sample size must be >= 1");
  PositionSet set{size, std::vector<double>(size), formula};
  const auto y = reduced_regressors(formula, formula.family, size);
  for (int i = 0; i < size; ++i) set.p[i] = reduced_cdf(formula.family, y[i]);
  return set;
}

PositionSet make_positions(const PositionFormula& formula, int size) {
  if (formula.is_proposed()) {
    return proposed_positions(formula.family, size, formula.order, formula.means_mode);
  }
  return classical_positions(formula, size);
}

std::vector<double> reduced_regressors(const PositionFormula& formula, Family family, int size) {
  const Family reduced = family == Family::LogNormal3 ? Family::Normal : family;
  std::vector<double> y(size);
  if (formula.is_proposed()) {
    for (int i = 1; i <= size; ++i) {
      y[i - 1] = formula.means_mode == CovMode::Exact
                     ? exact_mean(reduced, i, size)
                     : expansion_mean(reduced, i, size, formula.order);
    }
    return y;
  }
  const auto set = classical_positions(formula, size);
  for (int i = 0; i < size; ++i) y[i] = reduced_quantile(reduced, set.p[i]);
  return y;
}

bool symmetry_check(const PositionSet& set) {
  const auto n = set.p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(set.p[i] - (1.0 - set.p[n - 1 - i])) > 1e-12) return false;
  }
  return true;
}

std::vector<double> sorted_observations(std::span<const double> x) {
  std::vector<double> out(x.begin(), x.end());
  std::stable_sort(out.begin(), out.end());
  return out;
}

}  // namespace ppbench
