#pragma once

/**
 * @file state.hpp
 * @brief Domain types shared by the equation-of-state and cycle modules.
 *
 * Naming follows the economic dictionary used throughout the library:
 *   P  price level                (pressure analog)
 *   Q  volume, structure, quality (volume analog)
 *   I  internal politics stability (temperature analog)
 *   E  economic entropy
 *   G  growth potential           (internal-energy analog)
 *
 * All types are immutable values. Factories validate invariants and throw
 * DomainError / PathError on violation.
 */

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace econthermo {

/// A point (P, Q, I) of the open octant (0,inf)^3.
class StatePoint {
 public:
  /// (1, 1, 1)
  StatePoint() = default;
  static StatePoint make(double P, double Q, double I);

  double price() const { return P_; }
  double volume() const { return Q_; }
  double stability() const { return I_; }

  friend bool operator==(const StatePoint&, const StatePoint&) = default;

 private:
  StatePoint(double P, double Q, double I) : P_(P), Q_(Q), I_(I) {}
  double P_ = 1.0;
  double Q_ = 1.0;
  double I_ = 1.0;
};

StatePoint make_state(double P, double Q, double I);

/// Ideal income law PQ = nRI with growth potential G = (f/2) nRI.
///
/// Entropy is relative to a reference state (Q_ref, I_ref), default (1, 1).
class IdealIncomeModel {
 public:
  static IdealIncomeModel make(double n, double R, int f, double Q_ref = 1.0,
                               double I_ref = 1.0);

  double moles() const { return n_; }
  double income_constant() const { return R_; }
  int degrees_of_freedom() const { return f_; }
  double reference_volume() const { return Q_ref_; }
  double reference_stability() const { return I_ref_; }

  /// n * R
  double nR() const { return n_ * R_; }
  /// f / 2
  double half_dof() const { return 0.5 * f_; }

  friend bool operator==(const IdealIncomeModel&, const IdealIncomeModel&) = default;

 private:
  IdealIncomeModel(double n, double R, int f, double Q_ref, double I_ref)
      : n_(n), R_(R), f_(f), Q_ref_(Q_ref), I_ref_(I_ref) {}
  double n_;
  double R_;
  int f_;
  double Q_ref_;
  double I_ref_;
};

/// Economic Van der Waals model (P + a/Qm^2)(Qm - b) = RI, with n moles.
class VdWModel {
 public:
  static VdWModel make(double a, double b, double R, double n = 1.0);

  double cohesion() const { return a_; }
  double excluded_volume() const { return b_; }
  double income_constant() const { return R_; }
  double moles() const { return n_; }

  friend bool operator==(const VdWModel&, const VdWModel&) = default;

 private:
  VdWModel(double a, double b, double R, double n) : a_(a), b_(b), R_(R), n_(n) {}
  double a_;
  double b_;
  double R_;
  double n_;
};

std::string model_id(const IdealIncomeModel& model);
std::string model_id(const VdWModel& model);

struct ExtendedState {
  StatePoint point;
  double entropy = 0.0;
  double growth = 0.0;

  friend bool operator==(const ExtendedState&, const ExtendedState&) = default;
};

/// Fills E and G for a point of an ideal-income model.
ExtendedState extend(const IdealIncomeModel& model, const StatePoint& point);

enum class PathKind { IsoIps, Isentropic, VdWIsotherm };

std::string_view to_string(PathKind kind);
PathKind path_kind_from_string(std::string_view name);

/// A sampled reversible process. Samples are ordered along the direction of travel.
class ProcessPath {
 public:
  /// Validates length, Q monotonicity and the kind's invariant (constant I or E).
  static ProcessPath make(PathKind kind, std::vector<ExtendedState> samples,
                          std::string model_id);

  PathKind kind() const { return kind_; }
  const std::vector<ExtendedState>& samples() const { return samples_; }
  const std::string& model_id() const { return model_id_; }

  const ExtendedState& front() const { return samples_.front(); }
  const ExtendedState& back() const { return samples_.back(); }

  /// Same samples traversed in the opposite direction.
  ProcessPath reversed() const;

  friend bool operator==(const ProcessPath&, const ProcessPath&) = default;

 private:
  ProcessPath(PathKind kind, std::vector<ExtendedState> samples, std::string model_id)
      : kind_(kind), samples_(std::move(samples)), model_id_(std::move(model_id)) {}
  PathKind kind_;
  std::vector<ExtendedState> samples_;
  std::string model_id_;
};

enum class Orientation { Clockwise, Counterclockwise };

std::string_view to_string(Orientation o);
Orientation orientation_from_string(std::string_view name);

/// Result of assembling a four-leg cycle. Vertices are states 1..4 of the
/// Q-P diagram; legs are stored in traversal order.
struct CycleReport {
  std::array<ExtendedState, 4> vertices;
  double W = 0.0;
  double q_H = 0.0;
  double q_C = 0.0;
  double eta = 0.0;
  double E_A = 0.0;
  double E_B = 0.0;
  double residual_dG = 0.0;
  double residual_W = 0.0;
  Orientation orientation = Orientation::Clockwise;
  std::vector<ProcessPath> legs;

  friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

}  // namespace econthermo
