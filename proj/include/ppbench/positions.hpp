#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppbench/distributions.hpp"
#include "ppbench/order_stats.hpp"

namespace ppbench {

enum class FormulaId {
  Hazen,
  Beard,
  Blom,
  Tukey,
  Gringorten,
  YuHuangNormal,  // Yu and Huang (a)
  YuHuangGumbel,  // Yu and Huang (b)
  De,
  Weibull,
  Cunnane,
  Adamowski,
  Kerman,
  ErtoLepore2013,
  Proposed,
};

/// One plotting-position rule: either a classical (i - A)/(N + B) rule or the
/// expansion-based positions F_Z(y_(i)) for a given family and order.
struct PositionFormula {
  FormulaId id = FormulaId::Weibull;
  Family family = Family::Normal;  // Proposed only
  int order = 4;                   // Proposed only
  CovMode means_mode = CovMode::Expansion;  // Proposed only; Exact uses quadrature means

  static PositionFormula classical(FormulaId id);
  static PositionFormula proposed(Family family, int order = 4,
                                  CovMode mode = CovMode::Expansion);

  bool is_proposed() const { return id == FormulaId::Proposed; }

  /// Short machine name ("weibull", "proposed-k4", ...).
  std::string name() const;
  /// Human-readable label.
  std::string label() const;
};

/// Parses "hazen", "blom", "yu-huang-a", "erto-lepore-2013", "proposed", ...
/// `family` and `order` apply to "proposed".
PositionFormula parse_formula(std::string_view name, Family family = Family::Normal, int order = 4);

/// All classical catalogue entries, in catalogue order.
std::vector<FormulaId> classical_catalogue();

struct PlottingConstants {
  double a;
  double b;
};

/// (A, B) of a classical rule at sample size N. Blom-form rules have B = 1 - 2A.
PlottingConstants plotting_constants(FormulaId id, int size);

struct PositionSet {
  int size = 0;
  std::vector<double> p;
  PositionFormula formula;
};

/// p_i = (i - A)/(N + B). Throws InvalidPositions if any p_i is outside (0,1).
PositionSet classical_positions(const PositionFormula& formula, int size);

/// p_i = F_Z(y_(i)) with y from build_moments.
PositionSet proposed_positions(Family family, int size, int order, CovMode mode = CovMode::Expansion);

/// Dispatches on formula kind. For proposed formulas the formula's family is used.
PositionSet make_positions(const PositionFormula& formula, int size);

/// Reduced-scale regressors y_(i) for a probability paper of `family`.
/// Classical rules map through the reduced quantile; proposed rules return
/// the expansion (or exact) means directly.
std::vector<double> reduced_regressors(const PositionFormula& formula, Family family, int size);

/// True iff p_i = 1 - p_{N-i+1} within 1e-12 for all i.
bool symmetry_check(const PositionSet& set);

/// Stable ascending order of `x`; ties keep input order.
std::vector<double> sorted_observations(std::span<const double> x);

}  // namespace ppbench
