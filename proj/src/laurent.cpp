#include "leavitt/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "leavitt/error.hpp"
#include "leavitt/graph_algorithms.hpp"

namespace leavitt {

LaurentMatrix::LaurentMatrix(RingSpec ring, std::size_t n)
    : ring_(ring), n_(n), cells_(n * n) {}

LaurentMatrix LaurentMatrix::unit(RingSpec ring, std::size_t n, std::size_t i, std::size_t j,
                                  int k, const mpq_class& c) {
  LaurentMatrix m(ring, n);
  m.add_to(i, j, k, c);
  return m;
}

void LaurentMatrix::add_to(std::size_t i, std::size_t j, int k, const mpq_class& c) {
  Entry& cell = cells_.at(i * n_ + j);
  auto [it, inserted] = cell.try_emplace(k, 0);
  it->second = ring_.canonical(it->second + c);
  if (sgn(it->second) == 0) cell.erase(it);
}

bool LaurentMatrix::is_zero() const {
  for (const auto& c : cells_)
    if (!c.empty()) return false;
  return true;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
  LaurentMatrix out = *this;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& [k, c] : o.at(i, j)) out.add_to(i, j, k, c);
  return out;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  LaurentMatrix out(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t l = 0; l < n_; ++l)
      for (const auto& [k1, c1] : at(i, l))
        for (std::size_t j = 0; j < n_; ++j)
          for (const auto& [k2, c2] : o.at(l, j)) out.add_to(i, j, k1 + k2, c1 * c2);
  return out;
}

LaurentMatrix LaurentMatrix::scaled(const mpq_class& c) const {
  LaurentMatrix out(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& [k, v] : at(i, j)) out.add_to(i, j, k, v * c);
  return out;
}

std::string LaurentMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ", ";
      const Entry& e = at(i, j);
      if (e.empty()) os << '0';
      bool first = true;
      for (const auto& [k, c] : e) {
        if (!first) os << " + ";
        os << c.get_str() << "x^" << k;
        first = false;
      }
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

struct CycleLayout {
  std::size_t n = 0;
  std::vector<std::size_t> position;  // vertex -> index along the cycle
  std::vector<std::size_t> edge_pos;  // edge -> index of its source
};

CycleLayout layout(const Graph& g) {
  const auto cycle = single_cycle_edges(g);
  if (cycle.empty()) throw_argument("graph is not a single cycle");
  CycleLayout c;
  c.n = cycle.size();
  c.position.resize(g.vertex_count());
  c.edge_pos.resize(g.edge_count());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    c.position[g.edge(cycle[i]).src] = i;
    c.edge_pos[cycle[i]] = i;
  }
  return c;
}

LaurentMatrix edge_matrix(const RingSpec& r, const CycleLayout& c, EdgeId e, bool ghost) {
  const std::size_t i = c.edge_pos[e];
  const std::size_t j = (i + 1) % c.n;
  const int k = i + 1 == c.n ? 1 : 0;
  return ghost ? LaurentMatrix::unit(r, c.n, j, i, -k) : LaurentMatrix::unit(r, c.n, i, j, k);
}

LaurentMatrix monomial_matrix(const RingSpec& r, const CycleLayout& c, const Monomial& m) {
  const std::size_t v = c.position[m.vertex];
  LaurentMatrix out = LaurentMatrix::unit(r, c.n, v, v, 0);
  if (!m.alpha.empty()) {
    out = edge_matrix(r, c, m.alpha.front(), false);
    for (std::size_t i = 1; i < m.alpha.size(); ++i) out = out * edge_matrix(r, c, m.alpha[i], false);
  }
  if (!m.beta.empty()) {
    // When alpha is empty start from r(beta) so the product keeps its shape.
    for (auto it = m.beta.rbegin(); it != m.beta.rend(); ++it)
      out = out * edge_matrix(r, c, *it, true);
  }
  return out;
}

LaurentMatrix image_of(const Algebra& a, const CycleLayout& c, const Element& x) {
  LaurentMatrix out(a.ring(), c.n);
  for (const auto& [m, coeff] : x.terms()) out = out + monomial_matrix(a.ring(), c, m).scaled(coeff);
  return out;
}

// All normal-form monomials alpha beta^* with |alpha|, |beta| <= d.
std::vector<Monomial> bounded_monomials(const Algebra& a, int d) {
  const Graph& g = a.graph();
  // Paths ending at each vertex, by length.
  std::vector<std::vector<std::vector<EdgeId>>> into(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) into[v].push_back({});
  std::vector<std::pair<std::vector<EdgeId>, VertexId>> frontier;
  for (VertexId v = 0; v < g.vertex_count(); ++v) frontier.push_back({{}, v});
  for (int len = 1; len <= d; ++len) {
    std::vector<std::pair<std::vector<EdgeId>, VertexId>> next;
    for (const auto& [p, end] : frontier) {
      // Extend backwards: prepend an edge landing at the path's start.
      const VertexId start = p.empty() ? end : g.edge(p.front()).src;
      for (EdgeId e : g.in_edges(start)) {
        std::vector<EdgeId> q{e};
        q.insert(q.end(), p.begin(), p.end());
        into[end].push_back(q);
        next.push_back({std::move(q), end});
      }
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const auto& alpha : into[v])
      for (const auto& beta : into[v]) {
        Monomial m{alpha, beta, v};
        if (!a.is_reducible(m)) out.push_back(std::move(m));
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LaurentMatrix laurent_image(const Algebra& a, const Element& x) {
  return image_of(a, layout(a.graph()), x);
}

LaurentReport laurent_matrix_check(const Algebra& a, int degree_bound) {
  if (degree_bound < 1) throw_argument("degree bound must be at least 1");
  const CycleLayout c = layout(a.graph());
  LaurentReport rep;
  rep.cycle_length = c.n;
  rep.degree_bound = degree_bound;
  const auto basis = bounded_monomials(a, degree_bound);
  rep.monomials = basis.size();

  std::vector<LaurentMatrix> images;
  images.reserve(basis.size());
  for (const auto& m : basis) images.push_back(monomial_matrix(a.ring(), c, m));
  std::set<std::string> seen;
  rep.images_distinct = true;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].is_zero() || !seen.insert(images[i].to_string()).second) {
      rep.images_distinct = false;
      if (!rep.first_failure)
        rep.first_failure = "image of " + a.to_string(basis[i]) + " is zero or repeated";
    }
  }

  rep.multiplicative = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Element x = a.monomial(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Element y = a.monomial(basis[j]);
      ++rep.products_checked;
      if (image_of(a, c, x * y) == images[i] * images[j]) continue;
      rep.multiplicative = false;
      if (!rep.first_failure)
        rep.first_failure = "product " + a.to_string(basis[i]) + " * " + a.to_string(basis[j]) +
                            " does not match";
    }
  }
  return rep;
}

}  // namespace leavitt
