#include "sparks/nerve.hpp"

#include <algorithm>

namespace sparks {

namespace {

void close_under_faces(std::set<Simplex>& out, const Simplex& s) {
  if (s.empty() || !out.insert(s).second) return;
  if (s.size() == 1) return;
  for (std::size_t m = 0; m < s.size(); ++m) close_under_faces(out, face(s, m));
}

struct Matrix {
  std::vector<std::vector<Rational>> rows;
  std::size_t cols = 0;
};

// Matrix of delta: C^degree -> C^(degree+1) in the nerve's simplex order.
Matrix delta_matrix(const Nerve& nerve, int degree) {
  const auto& domain = nerve.simplices(degree);
  const auto& codomain = nerve.simplices(degree + 1);
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < domain.size(); ++i) index[domain[i]] = i;
  Matrix m;
  m.cols = domain.size();
  for (const Simplex& s : codomain) {
    std::vector<Rational> row(m.cols);
    for (std::size_t k = 0; k < s.size(); ++k) row[index.at(face(s, k))] += k % 2 == 0 ? 1 : -1;
    m.rows.push_back(std::move(row));
  }
  return m;
}

// Reduced row echelon form in place over [A | rhs]; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t c = col; c < rows[i].size(); ++c) rows[i][c] -= factor * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace

Simplex face(const Simplex& s, std::size_t m) {
  Simplex out;
  out.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != m) out.push_back(s[i]);
  }
  return out;
}

Nerve::Nerve(int vertex_count, std::set<Simplex> simplices)
    : vertex_count_(vertex_count), all_(std::move(simplices)) {
  if (vertex_count_ < 1) throw std::invalid_argument("nerve needs at least one vertex");
  for (int v = 0; v < vertex_count_; ++v) all_.insert(Simplex{v});
  for (const Simplex& s : all_) {
    if (s.empty()) throw std::invalid_argument("empty simplex");
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("simplex vertices must be strictly increasing");
    }
    if (s.front() < 0 || s.back() >= vertex_count_) {
      throw std::invalid_argument("simplex vertex out of range");
    }
    if (s.size() > 1) {
      for (std::size_t m = 0; m < s.size(); ++m) {
        if (!all_.contains(face(s, m))) {
          throw std::invalid_argument("nerve is not closed under faces");
        }
      }
    }
    const std::size_t degree = s.size() - 1;
    if (by_degree_.size() <= degree) by_degree_.resize(degree + 1);
    by_degree_[degree].push_back(s);
  }
}

Nerve Nerve::from_maximal(int vertex_count, const std::vector<Simplex>& maximal) {
  std::set<Simplex> all;
  for (Simplex s : maximal) {
    std::sort(s.begin(), s.end());
    close_under_faces(all, s);
  }
  return Nerve(vertex_count, std::move(all));
}

Nerve Nerve::triangle() { return from_maximal(3, {{0, 1}, {1, 2}, {0, 2}}); }

const std::vector<Simplex>& Nerve::simplices(int degree) const {
  static const std::vector<Simplex> empty;
  if (degree < 0 || degree >= static_cast<int>(by_degree_.size())) return empty;
  return by_degree_[static_cast<std::size_t>(degree)];
}

std::optional<Cochain<Rational>> solve_coboundary(const Nerve& nerve,
                                                  const Cochain<Rational>& target) {
  check_support(nerve, target);
  const int degree = target.degree - 1;
  if (degree < 0) {
    if (target.is_zero()) return Cochain<Rational>{degree, {}};
    return std::nullopt;
  }
  Matrix m = delta_matrix(nerve, degree);
  const auto& codomain = nerve.simplices(target.degree);
  for (std::size_t i = 0; i < codomain.size(); ++i) m.rows[i].push_back(target.at(codomain[i]));
  const std::vector<std::size_t> pivots = row_reduce(m.rows, m.cols + 1);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  const auto& domain = nerve.simplices(degree);
  Cochain<Rational> x{degree, {}};
  for (std::size_t i = 0; i < pivots.size(); ++i) x.add(domain[pivots[i]], m.rows[i][m.cols]);
  return x;
}

std::vector<Cochain<Rational>> cocycle_basis(const Nerve& nerve, int degree) {
  Matrix m = delta_matrix(nerve, degree);
  const std::vector<std::size_t> pivots = row_reduce(m.rows, m.cols);
  const auto& domain = nerve.simplices(degree);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Cochain<Rational>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Cochain<Rational> v{degree, {}};
    v.add(domain[free], Rational(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) v.add(domain[pivots[i]], -m.rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Chain boundary(const Chain& c) {
  Chain out{c.degree - 1, {}};
  for (const auto& [s, n] : c.coefficients) {
    if (s.size() < 2) continue;
    for (std::size_t m = 0; m < s.size(); ++m) {
      Integer& slot = out.coefficients[face(s, m)];
      slot += m % 2 == 0 ? Integer(n) : Integer(-n);
    }
  }
  std::erase_if(out.coefficients, [](const auto& kv) { return kv.second == 0; });
  return out;
}

CircleNumber flat_bundle_product(const Nerve& nerve, const Cochain<Integer>& r,
                                 const Cochain<Rational>& b10, const Chain& cycle) {
  if (r.degree != 2) throw DegreeError("r must have Cech degree 2");
  if (b10.degree != 1) throw DegreeError("b10 must have Cech degree 1");
  if (cycle.degree != 3) throw DegreeError("cycle must be a combination of 3-simplices");
  check_support(nerve, r);
  check_support(nerve, b10);
  for (const auto& [s, n] : cycle.coefficients) {
    if (static_cast<int>(s.size()) != 4 || !nerve.contains(s)) {
      throw DegreeError("cycle uses a simplex that is not a 3-simplex of the nerve");
    }
  }
  if (!is_cocycle(nerve, r)) throw PreconditionError("r is not a cocycle");
  for (const auto& [s, v] : cech_delta(nerve, b10).values) {
    if (!is_integer(v)) throw PreconditionError("delta b10 is not integer-valued");
  }
  if (!boundary(cycle).coefficients.empty()) throw PreconditionError("chain is not a cycle");
  const Cochain<Rational> cup = cech_cup(nerve, cochain_cast<Rational>(r), b10);
  return CircleNumber(ExactScalar(pair(cup, cycle)));
}

}  // namespace sparks
