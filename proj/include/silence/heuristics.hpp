#ifndef SILENCE_HEURISTICS_HPP
#define SILENCE_HEURISTICS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "silence/centering.hpp"

namespace silence {

enum class FamilyKind { SuperLevel, EqualSides, EqualAreas, ModeAsConditionalMean };

inline constexpr std::array<FamilyKind, 4> kAllFamilies{
    FamilyKind::SuperLevel, FamilyKind::EqualSides, FamilyKind::EqualAreas,
    FamilyKind::ModeAsConditionalMean};

const char* to_string(FamilyKind kind);

/// {x : pdf(x) >= level} for the largest level whose set still holds mass
/// eta. On a flat top the mass-eta interval centred in the plateau is
/// returned.
Interval super_level_interval(const Density& d, double eta);

/// [mode - w, mode + w] clipped to the support, with the smallest w holding
/// mass eta. Clipping at a support edge lets the other side keep growing.
Interval equal_sides_interval(const Density& d, double eta);

/// eta/2 of mass on each side of the mode; a side that runs out of mass is
/// clipped at the support edge and the deficit is taken on the other side.
Interval equal_areas_interval(const Density& d, double eta);

/// Member of the mass-eta sliding family whose conditional mean equals the
/// mode, or nullopt when no member has that property. `grid` controls the
/// sign-change search.
std::optional<Interval> mode_as_mean_interval(const Density& d, double eta,
                                              int grid = 101);

std::optional<Interval> family_interval(const Density& d, FamilyKind kind, double eta,
                                        int grid = 101);

struct FamilyRow {
  double eta = 0.0;
  FamilyKind family = FamilyKind::SuperLevel;
  std::optional<Interval> interval;  // nullopt: family has no member
  std::optional<double> cond_variance;
};

struct CurvePoint {
  double eta = 0.0;
  double a = 0.0;
  double cond_variance = 0.0;
};

struct FamilySweep {
  std::string density;
  std::vector<FamilyRow> rows;          // per eta, the four families in order
  std::vector<SilenceDesign> optimal;   // per eta, brute-force optimum
  std::vector<CurvePoint> curves;       // sliding-family conditional variance
};

/// Families, optimum and sliding-family curves for every eta (sorted
/// ascending). `grid` is the scan resolution.
FamilySweep family_sweep(const Density& d, std::vector<double> etas, int grid = 200);

}  // namespace silence

#endif  // SILENCE_HEURISTICS_HPP
