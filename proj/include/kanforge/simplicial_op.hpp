#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kanforge {

// A monotone map [m] -> [n] in the simplex category, stored by its values.
// values.size() == m+1, each value in 0..n, weakly increasing.
struct SimplicialOperator {
  int cod = 0;                // n
  std::vector<int> values;    // images of 0..m

  int dom() const { return static_cast<int>(values.size()) - 1; }

  bool operator==(const SimplicialOperator&) const = default;
};

SimplicialOperator identity_op(int n);
SimplicialOperator face_op(int n, int i);    // d_i : [n-1] -> [n]
SimplicialOperator degen_op(int n, int i);   // s_i : [n+1] -> [n]
SimplicialOperator terminal_op(int m);       // [m] -> [0]

bool is_valid_op(const SimplicialOperator& a);
bool is_epi(const SimplicialOperator& a);
bool is_mono(const SimplicialOperator& a);

// compose_ops(beta, alpha) = alpha after beta (beta is applied first):
// x . beta . alpha corresponds to the function alpha o beta.
SimplicialOperator compose_ops(const SimplicialOperator& beta,
                               const SimplicialOperator& alpha);

// alpha = mono o epi, the unique image factorization.
struct EpiMonoFactorization {
  SimplicialOperator epi;
  SimplicialOperator mono;
};
EpiMonoFactorization epi_mono_factor(const SimplicialOperator& alpha);

// All monotone maps [m] -> [n].
std::vector<SimplicialOperator> enumerate_ops(int m, int n);
// All epis [m] ->> [k] for k <= m, and all monos [m] >-> [n].
std::vector<SimplicialOperator> enumerate_epis_from(int m);
std::vector<SimplicialOperator> enumerate_monos(int m, int n);

// Preimage alpha^{-1}(i), ascending.
std::vector<int> op_preimage(const SimplicialOperator& a, int i);

std::string op_to_string(const SimplicialOperator& a);

} // namespace kanforge
