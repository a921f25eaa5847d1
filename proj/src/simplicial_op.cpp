#include "kanforge/simplicial_op.hpp"

#include <algorithm>

namespace kanforge {

SimplicialOperator identity_op(int n) {
  SimplicialOperator a;
  a.cod = n;
  a.values.resize(n + 1);
  for (int i = 0; i <= n; ++i) a.values[i] = i;
  return a;
}

SimplicialOperator face_op(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("face_op: bad index");
  SimplicialOperator a;
  a.cod = n;
  for (int v = 0; v <= n; ++v)
    if (v != i) a.values.push_back(v);
  return a;
}

SimplicialOperator degen_op(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("degen_op: bad index");
  SimplicialOperator a;
  a.cod = n;
  for (int v = 0; v <= n + 1; ++v) a.values.push_back(v <= i ? v : v - 1);
  return a;
}

SimplicialOperator terminal_op(int m) {
  SimplicialOperator a;
  a.cod = 0;
  a.values.assign(m + 1, 0);
  return a;
}

bool is_valid_op(const SimplicialOperator& a) {
  if (a.values.empty() || a.cod < 0) return false;
  for (size_t k = 0; k < a.values.size(); ++k) {
    if (a.values[k] < 0 || a.values[k] > a.cod) return false;
    if (k > 0 && a.values[k] < a.values[k - 1]) return false;
  }
  return true;
}

bool is_epi(const SimplicialOperator& a) {
  std::vector<bool> hit(a.cod + 1, false);
  for (int v : a.values) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_mono(const SimplicialOperator& a) {
  for (size_t k = 1; k < a.values.size(); ++k)
    if (a.values[k] <= a.values[k - 1]) return false;
  return true;
}

SimplicialOperator compose_ops(const SimplicialOperator& beta,
                               const SimplicialOperator& alpha) {
  if (beta.cod != alpha.dom())
    throw std::invalid_argument("compose_ops: dimension mismatch");
  SimplicialOperator c;
  c.cod = alpha.cod;
  c.values.reserve(beta.values.size());
  for (int v : beta.values) c.values.push_back(alpha.values[v]);
  return c;
}

EpiMonoFactorization epi_mono_factor(const SimplicialOperator& alpha) {
  // Image of alpha, ascending, determines the mono; the epi collapses onto it.
  std::vector<int> image;
  for (int v : alpha.values)
    if (image.empty() || image.back() != v) image.push_back(v);
  SimplicialOperator mono;
  mono.cod = alpha.cod;
  mono.values = image;
  SimplicialOperator epi;
  epi.cod = static_cast<int>(image.size()) - 1;
  for (int v : alpha.values) {
    auto it = std::lower_bound(image.begin(), image.end(), v);
    epi.values.push_back(static_cast<int>(it - image.begin()));
  }
  return {epi, mono};
}

std::vector<SimplicialOperator> enumerate_ops(int m, int n) {
  std::vector<SimplicialOperator> out;
  SimplicialOperator cur;
  cur.cod = n;
  cur.values.assign(m + 1, 0);
  // Weakly increasing sequences over 0..n of length m+1.
  while (true) {
    out.push_back(cur);
    int k = m;
    while (k >= 0 && cur.values[k] == n) --k;
    if (k < 0) break;
    int v = cur.values[k] + 1;
    for (int j = k; j <= m; ++j) cur.values[j] = v;
  }
  return out;
}

std::vector<SimplicialOperator> enumerate_epis_from(int m) {
  std::vector<SimplicialOperator> out;
  for (int k = 0; k <= m; ++k)
    for (const auto& a : enumerate_ops(m, k))
      if (is_epi(a)) out.push_back(a);
  return out;
}

std::vector<SimplicialOperator> enumerate_monos(int m, int n) {
  std::vector<SimplicialOperator> out;
  for (const auto& a : enumerate_ops(m, n))
    if (is_mono(a)) out.push_back(a);
  return out;
}

std::vector<int> op_preimage(const SimplicialOperator& a, int i) {
  std::vector<int> out;
  for (size_t k = 0; k < a.values.size(); ++k)
    if (a.values[k] == i) out.push_back(static_cast<int>(k));
  return out;
}

std::string op_to_string(const SimplicialOperator& a) {
  std::string s = "[";
  for (size_t k = 0; k < a.values.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(a.values[k]);
  }
  s += "]>" + std::to_string(a.cod);
  return s;
}

} // namespace kanforge
