#pragma once

// Benchmark LTI plants, ZOH discretization, offline data generation, and the
// model-based LQR oracles (Riccati gain, Lyapunov cost) used to evaluate
// attacks and defenses.

#include "ddcadv/matcalc.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace ddcadv {

struct UnstableClosedLoopError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataGenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SystemModel {
  std::string name;
  Matrix A;   // n x n, discrete-time
  Matrix B;   // n x m
  Matrix Q;   // n x n, PSD
  Matrix R;   // m x m, PD
  double Ts = 0.1;

  int n() const { return static_cast<int>(A.rows()); }
  int m() const { return static_cast<int>(B.cols()); }
};

/// Exact zero-order-hold discretization via the augmented matrix exponential.
std::pair<Matrix, Matrix> discretize_zoh(const Matrix& Ac, const Matrix& Bc, double Ts);

/// PBH test restricted to eigenvalues with |lambda| >= 1.
bool is_stabilizable(const Matrix& A, const Matrix& B, double tol = 1e-8);

/// Loads a benchmark config (JSON with name, Ac, Bc, Ts, Q, R; matrices as
/// row-major nested arrays) and discretizes it. `id_or_path` is resolved as a
/// path when it contains '/' or ends in ".json"; otherwise as
/// <benchmark dir>/<id>.json, where the directory comes from the
/// DDCADV_BENCHMARKS env var, ./benchmarks, or the source-tree default.
SystemModel load_benchmark(const std::string& id_or_path);

/// The six bundled benchmark ids.
const std::vector<std::string>& benchmark_ids();

struct DataBatch {
  Matrix Z;  // n x T
  Matrix X;  // n x T
  Matrix U;  // m x T
  std::uint64_t seed = 0;

  int n() const { return static_cast<int>(X.rows()); }
  int m() const { return static_cast<int>(U.rows()); }
  int T() const { return static_cast<int>(X.cols()); }

  /// D = [Z; X; U], (2n+m) x T
  Matrix D() const;
  /// Gamma = [U; X], (m+n) x T
  Matrix Gamma() const;
};

/// Splits a stacked (2n+m) x T data matrix back into a batch.
DataBatch batch_from_stacked(const Matrix& D, int n, int m);

/// Default experiment horizon.
inline int default_horizon(const SystemModel& model) { return 2 * (model.n() + model.m()); }

/// Rolls out u_t ~ N(0, I_m), x_0 ~ N(0, I_n) through the dynamics.
/// Regenerates with an incremented seed if Gamma is rank deficient
/// (at most 10 retries).
DataBatch generate_batch(const SystemModel& model, int T, std::uint64_t seed);

/// Discrete algebraic Riccati fixed point; returns K with closed loop A + BK
/// and rho(A + BK) < 1.
Matrix lqr_riccati(const SystemModel& model, int max_iters = 200000, double tol = 1e-15);

/// Solves P = M P M^T + W.
Matrix solve_discrete_lyapunov(const Matrix& M, const Matrix& W);

/// J(K) = tr(QP) + tr(K^T R K P) with P the closed-loop Gramian
/// (P = (A+BK) P (A+BK)^T + I). Throws UnstableClosedLoopError if
/// rho(A+BK) >= 1.
double lqr_cost(const SystemModel& model, const Matrix& K);

double spectral_radius(const Matrix& M);

}  // namespace ddcadv
