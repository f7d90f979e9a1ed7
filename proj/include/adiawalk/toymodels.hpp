#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adiawalk/evolution.hpp"
#include "adiawalk/linalg.hpp"
#include "adiawalk/schedules.hpp"

namespace adiawalk {

enum class ToyKind { Toy1, Toy2, FourLevel };

struct ToyModelSpec {
  ToyKind kind = ToyKind::Toy1;
  double eps = 0.0;
};

ToyKind parse_toy_kind(const std::string& name);
std::string toy_kind_name(ToyKind kind);

struct ToyModel {
  HermitianOperator h0, h1;
  Schedule schedule;
  bool branch_cut_warning = false;
};

// Eigenvectors in ascending eigenvalue order, first nonzero component real positive.
Matrix ordered_eigenbasis(const HermitianOperator& h);
// Eigenbasis of tridiag(-1, 2, -1) of size 4.
Matrix tridiagonal_basis();

ToyModel build_toy(const ToyModelSpec& spec);

const std::vector<double>& table_eps_values();

struct ReferenceGaps {
  double gap_h = 0.0;
  double gap_w = 0.0;
  bool outlier = false;  // published row that breaks the monotone trend
};
std::optional<ReferenceGaps> reference_gaps(ToyKind kind, double eps);

struct GapTableRow {
  double eps = 0.0;
  double gap_h = 0.0;
  double gap_w = 0.0;
  std::optional<ReferenceGaps> reference;
};

// Minimal gaps of H(s) and of the h = 1 PF1 walk over grid + 1 points.
GapTableRow gap_table_row(ToyKind kind, double eps, std::size_t grid = 10000, double h = 1.0);
std::vector<GapTableRow> gap_table(ToyKind kind, const std::vector<double>& eps_list, std::size_t grid = 10000,
                                   double h = 1.0);

struct FidelityRow {
  double t = 0.0;
  double h = 0.0;
  std::size_t steps = 0;
  EvolutionResult result;
};

// Toy2 PF1 evolution from the ground state of H0, fidelities against H1 eigenstates.
std::vector<FidelityRow> fidelity_sweep(double eps, const std::vector<double>& t_list, const std::vector<double>& h_list);
std::vector<FidelityRow> fidelity_sweep_serial(double eps, const std::vector<double>& t_list,
                                               const std::vector<double>& h_list);

}  // namespace adiawalk
