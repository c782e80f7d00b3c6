#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "leavitt/error.hpp"
#include "leavitt/graph_algorithms.hpp"
#include "leavitt/ideal_lattice.hpp"
#include "oracles.hpp"
#include "small_graph.hpp"

using namespace leavitt;
using testing_support::Brute;
using testing_support::fixture;
using testing_support::to_brute;
using testing_support::to_mask;
using testing_support::to_pair;

namespace {

VertexSet set(const Graph& g, std::vector<std::string> names) { return g.vertex_set(names); }

AdmissiblePair pair(const Graph& g, std::vector<std::string> h, std::vector<std::string> s) {
  return {set(g, std::move(h)), set(g, std::move(s))};
}

std::vector<testing_support::SmallGraph> lattice_family() {
  auto family = testing_support::all_small_graphs(3, 3, 2);
  auto extra = testing_support::random_graphs(300, 4, 5, 6, 2, 4242);
  family.insert(family.end(), extra.begin(), extra.end());
  return family;
}

const RingSpec Z = RingSpec::integers();
const RingSpec Q = RingSpec::rationals();

}  // namespace

TEST_CASE("admissible pair enumeration") {
  const Graph& single = *fixture("single");
  const auto ps = enumerate_admissible_pairs(single);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == pair(single, {}, {}));
  CHECK(ps[1] == pair(single, {"v"}, {}));

  const Graph& a2 = *fixture("a2");
  CHECK(enumerate_admissible_pairs(a2) ==
        std::vector<AdmissiblePair>{pair(a2, {}, {}), pair(a2, {"v1", "v2"}, {})});

  const Graph& ex = *fixture("emitter_loop");
  CHECK(enumerate_admissible_pairs(ex) ==
        std::vector<AdmissiblePair>{pair(ex, {}, {}), pair(ex, {"v"}, {}), pair(ex, {"v"}, {"w"}),
                                    pair(ex, {"v", "w"}, {})});
  CHECK(to_string(ex, pair(ex, {"v"}, {"w"})) == "({v}, {w})");

  CHECK(is_admissible(ex, pair(ex, {"v"}, {"w"})));
  CHECK_FALSE(is_admissible(ex, pair(ex, {"w"}, {})));
  CHECK_FALSE(is_admissible(ex, pair(ex, {}, {"w"})));
  CHECK_THROWS_AS(require_admissible(ex, pair(ex, {"w"}, {})), Error);
  CHECK_THROWS_AS(make_pair(ex, {"nope"}, {}), Error);
  CHECK(make_pair(ex, {"v"}, {"w"}) == pair(ex, {"v"}, {"w"}));
}

TEST_CASE("ideal from hereditary set") {
  const Graph& a2 = *fixture("a2");
  CHECK(ideal_from_hereditary(a2, set(a2, {"v2"})) == pair(a2, {"v1", "v2"}, {}));
  const Graph& t = *fixture("toeplitz");
  CHECK(ideal_from_hereditary(t, set(t, {"z"})) == pair(t, {"z"}, {}));
  CHECK_THROWS_AS(ideal_from_hereditary(a2, set(a2, {"v1"})), Error);
}

TEST_CASE("intersection and containment") {
  const Graph& bf = *fixture("bundle_fork");
  CHECK(intersect(bf, pair(bf, {"b"}, {"a"}), pair(bf, {"b", "c"}, {})) == pair(bf, {"b"}, {}));

  const Graph& ex = *fixture("emitter_loop");
  const AdmissiblePair top{ex.all_vertices(), ex.empty_set()};
  const AdmissiblePair bottom{ex.empty_set(), ex.empty_set()};
  for (const auto& p : enumerate_admissible_pairs(ex)) {
    CHECK(intersect(ex, p, top) == p);
    CHECK(intersect(ex, p, p) == p);
    CHECK(pair_leq(ex, bottom, p));
    CHECK(pair_leq(ex, p, top));
  }
  CHECK(pair_leq(ex, pair(ex, {"v"}, {}), pair(ex, {"v"}, {"w"})));
  CHECK_FALSE(pair_leq(ex, pair(ex, {"v"}, {"w"}), pair(ex, {"v"}, {})));
  CHECK_THROWS_AS(intersect(ex, pair(ex, {"w"}, {}), top), Error);

  // Chain of four: each pair covers the previous one.
  const auto all = enumerate_admissible_pairs(ex);
  const auto covers = hasse_edges(ex, all);
  CHECK(covers == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("quotient and subalgebra graphs") {
  const Graph& ex = *fixture("emitter_loop");
  const Graph q1 = quotient_graph(ex, pair(ex, {"v"}, {"w"}));
  CHECK(q1.vertex_names() == std::vector<std::string>{"w"});
  REQUIRE(q1.edge_count() == 1);
  CHECK(q1.edges()[0].id == "f");
  CHECK(q1.is_row_finite());

  const QuotientGraph q2 = build_quotient(ex, pair(ex, {"v"}, {}));
  CHECK(q2.graph.vertex_names() == std::vector<std::string>{"w", "w'"});
  REQUIRE(q2.graph.edge_count() == 2);
  CHECK(q2.graph.edges()[0].id == "f");
  CHECK(q2.graph.edges()[1].id == "f'");
  CHECK(q2.graph.vertex_name(q2.graph.edges()[1].dst) == "w'");
  CHECK(q2.vertex_prime[ex.vertex("w")] == q2.graph.vertex("w'"));
  CHECK_FALSE(q2.vertex_image[ex.vertex("v")]);

  CHECK(quotient_graph(ex, pair(ex, {}, {})) == ex);

  const Graph s1 = subalgebra_graph(ex, pair(ex, {"v"}, {"w"}));
  CHECK(s1.vertex_names() == std::vector<std::string>{"v", "w"});
  CHECK(s1.edge_count() == 0);
  CHECK(s1.bundles().size() == 1);
  CHECK(subalgebra_graph(ex, {ex.all_vertices(), ex.empty_set()}) == ex);

  const Graph& t = *fixture("toeplitz");
  const Graph s2 = subalgebra_graph(t, pair(t, {"z"}, {}));
  CHECK(s2.vertex_names() == std::vector<std::string>{"z"});
  CHECK(s2.edge_count() == 0);
}

TEST_CASE("quotient graphs against a counting oracle") {
  for (const auto& sg : lattice_family()) {
    const Graph g = testing_support::to_graph(sg);
    const Brute brute(sg);
    for (const auto& p : enumerate_admissible_pairs(g)) {
      CAPTURE(sg.describe());
      const auto bp = to_brute(p);
      const Brute::Mask primed = brute.b_h(bp.h) & ~bp.s;
      std::size_t named = 0, bundles = 0;
      for (const auto& [s, r] : sg.edges) {
        named += !((bp.h >> r) & 1u);
        named += (primed >> r) & 1u;
      }
      for (const auto& [s, r] : sg.bundles) {
        if ((bp.h >> s) & 1u) continue;
        bundles += !((bp.h >> r) & 1u);
        bundles += (primed >> r) & 1u;
      }
      const QuotientGraph q = build_quotient(g, p);
      CHECK(q.graph.vertex_count() ==
            static_cast<std::size_t>(sg.n - std::popcount(bp.h) + std::popcount(primed)));
      CHECK(q.graph.edge_count() == named);
      CHECK(q.graph.bundles().size() == bundles);
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (q.vertex_prime[v]) CHECK(q.graph.is_sink(*q.vertex_prime[v]));
    }
  }
}

TEST_CASE("ideal graphs") {
  const Graph& a2 = *fixture("a2");
  const IdealGraph full = ideal_graph(a2, {a2.all_vertices(), a2.empty_set()});
  CHECK_FALSE(full.truncated);
  CHECK(full.graph == a2);

  const Graph& fork = *fixture("a3_fork");
  const IdealGraph ig = ideal_graph(fork, pair(fork, {"v3"}, {}));
  CHECK_FALSE(ig.truncated);
  CHECK_FALSE(ig.infinite);
  CHECK(ig.graph.vertex_names() == std::vector<std::string>{"e1.e2", "e2", "v3"});
  REQUIRE(ig.graph.edge_count() == 2);
  for (const auto& e : ig.graph.edges()) CHECK(ig.graph.vertex_name(e.dst) == "v3");
  CHECK(ig.graph.edges()[0].id == "e1.e2~bar");
  CHECK(ig.graph.edges()[1].id == "e2~bar");

  const Graph& t = *fixture("toeplitz");
  const IdealGraph inf = ideal_graph(t, pair(t, {"z"}, {}), 4);
  CHECK(inf.infinite);
  CHECK(inf.truncated);
  CHECK(inf.path_bound == 4);
  // f, ef, eef, eeef
  CHECK(inf.graph.vertex_count() == 5);

  // The loop at w feeds S, so the paths ending in S never stop.
  const Graph& ex = *fixture("emitter_loop");
  const IdealGraph e2 = ideal_graph(ex, pair(ex, {"v"}, {"w"}));
  CHECK(e2.infinite);
}

TEST_CASE("prime and primitive ideals") {
  const Graph& t = *fixture("toeplitz");
  const RingSpec z6 = RingSpec::integers_mod(6);
  CHECK_FALSE(ideal_is_prime(t, z6, pair(t, {}, {})));
  CHECK(ideal_is_prime(t, Z, pair(t, {"z"}, {})));
  const Graph& ex = *fixture("emitter_loop");
  CHECK(ideal_is_prime(ex, Q, pair(ex, {"v"}, {})));
  CHECK_FALSE(ideal_is_prime(ex, Q, {ex.all_vertices(), ex.empty_set()}));

  const Graph& single = *fixture("single");
  CHECK(prime_graded_basic_ideals(single, Z).pairs == std::vector<AdmissiblePair>{pair(single, {}, {})});
  CHECK(prime_graded_basic_ideals(t, Z).pairs ==
        std::vector<AdmissiblePair>{pair(t, {}, {}), pair(t, {"z"}, {})});
  const IdealList none = prime_graded_basic_ideals(t, z6);
  CHECK(none.pairs.empty());
  CHECK(none.diagnostic.has_value());

  const Graph& c1 = *fixture("c1");
  CHECK(primitive_graded_ideals(c1, Q).pairs.empty());
  CHECK(primitive_graded_ideals(t, Q).pairs == std::vector<AdmissiblePair>{pair(t, {}, {})});
  const IdealList notfield = primitive_graded_ideals(t, Z);
  CHECK(notfield.pairs.empty());
  REQUIRE(notfield.diagnostic.has_value());
  CHECK(notfield.diagnostic->find("not a field") != std::string::npos);

  CHECK(ex.vertex_names() == std::vector<std::string>{"v", "w"});
  CHECK(prime_graded_basic_ideals(ex, Q).pairs ==
        std::vector<AdmissiblePair>{pair(ex, {}, {}), pair(ex, {"v"}, {}), pair(ex, {"v"}, {"w"})});
  CHECK(primitive_graded_ideals(ex, Q).pairs ==
        std::vector<AdmissiblePair>{pair(ex, {}, {}), pair(ex, {"v"}, {})});
}

TEST_CASE("algebra level predicates") {
  const Graph& single = *fixture("single");
  const Graph& two = *fixture("two_points");
  const Graph& t = *fixture("toeplitz");
  const Graph& c1 = *fixture("c1");
  const Graph& rose = *fixture("rose2");
  const Graph& a2 = *fixture("a2");

  CHECK(algebra_is_prime(single, Z));
  CHECK_FALSE(algebra_is_prime(two, Q));
  CHECK_FALSE(algebra_is_prime(t, RingSpec::integers_mod(6)));
  CHECK(algebra_is_prime(t, Z));

  CHECK(algebra_is_primitive(t, Q));
  CHECK_FALSE(algebra_is_primitive(t, Z));
  CHECK_FALSE(algebra_is_primitive(c1, Q));

  CHECK(algebra_is_simple_hint(rose, Q));
  CHECK_FALSE(algebra_is_simple_hint(t, Q));
  CHECK_FALSE(algebra_is_simple_hint(rose, Z));

  CHECK_FALSE(all_basic_ideals_graded(c1));
  CHECK(all_basic_ideals_graded(rose));
  CHECK(all_basic_ideals_graded(a2));

  CHECK(vertex_generates_minimal_left_ideal(a2, Q, a2.vertex("v1")));
  CHECK_FALSE(vertex_generates_minimal_left_ideal(a2, Z, a2.vertex("v1")));
  CHECK_FALSE(vertex_generates_minimal_left_ideal(t, Q, t.vertex("u")));

  const ClassificationReport rep = classify(t, Q);
  CHECK(rep.condition_L);
  CHECK(rep.algebra_is_primitive);
  CHECK_FALSE(rep.simple_by_criterion);
  CHECK(rep.maximal_tails.size() == 2);
  CHECK(rep.admissible_pairs.size() == 3);
}

TEST_CASE("lattice operations against brute force") {
  const std::vector<RingSpec> fields{Q, RingSpec::prime_field(5)};
  for (const auto& sg : lattice_family()) {
    CAPTURE(sg.describe());
    const Graph g = testing_support::to_graph(sg);
    const Brute brute(sg);

    std::vector<Brute::Pair> expected = brute.admissible_pairs();
    std::vector<Brute::Pair> got;
    const auto pairs = enumerate_admissible_pairs(g);
    for (const auto& p : pairs) got.push_back(to_brute(p));
    auto key = [](const Brute::Pair& p) { return std::pair(p.h, p.s); };
    std::set<std::pair<Brute::Mask, Brute::Mask>> es, gs;
    for (const auto& p : expected) es.insert(key(p));
    for (const auto& p : got) gs.insert(key(p));
    CHECK(gs.size() == got.size());
    CHECK(es == gs);

    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        const bool leq = pair_leq(g, pairs[i], pairs[j]);
        CHECK(leq == Brute::contained(got[i], got[j]));
        const AdmissiblePair m = intersect(g, pairs[i], pairs[j]);
        CHECK(is_admissible(g, m));
        CHECK(to_brute(m) == Brute::glb(got, got[i], got[j]));
      }

    // Closed forms against the quotient-graph predicates.
    std::vector<AdmissiblePair> prime_filter;
    for (const auto& p : pairs)
      if (ideal_is_prime(g, Z, p)) prime_filter.push_back(p);
    auto primes = prime_graded_basic_ideals(g, Z).pairs;
    std::sort(primes.begin(), primes.end());
    CHECK(primes == prime_filter);

    for (const auto& f : fields) {
      std::vector<AdmissiblePair> prim_filter;
      for (const auto& p : pairs)
        if (ideal_is_primitive(g, f, p)) prim_filter.push_back(p);
      auto prims = primitive_graded_ideals(g, f).pairs;
      std::sort(prims.begin(), prims.end());
      CHECK(prims == prim_filter);
    }
  }
}
