#include <doctest.h>

#include <random>

#include "../support/corpus.hpp"
#include "helpers.hpp"
#include "hamint/complex.hpp"
#include "hamint/errors.hpp"
#include "hamint/families.hpp"

using namespace hamint;
using namespace hamint::testsupport;

TEST_CASE("gap of a face") {
  CHECK(gap(consecutive_face(9, 2, 4), 2) == 0);
  CHECK(gap(Face{1, 2, 4}, 2) == 1);
  CHECK(gap(Face{1, 4, 7}, 2) == 4);
  CHECK_THROWS_AS(gap(Face{1, 2}, 2), ArityError);
}

TEST_CASE("consecutive faces wrap modulo n") {
  CHECK(consecutive_face(9, 2, 1) == Face{1, 2, 3});
  CHECK(consecutive_face(9, 2, 9) == Face{1, 2, 9});
  CHECK(consecutive_face(9, 2, 8) == Face{1, 8, 9});
  CHECK_THROWS_AS(consecutive_face(9, 2, 0), RangeError);
  CHECK_THROWS_AS(consecutive_face(9, 2, 10), RangeError);
}

TEST_CASE("gap zero exactly for linear consecutive faces") {
  int n = 7, d = 2;
  for (VertexMask m : subsets_of_size(full_mask(n), d + 1)) {
    Face f = Face::from_mask(m);
    bool linear = f.min() <= n - d && f == consecutive_face(n, d, f.min());
    CHECK((gap(f, d) == 0) == linear);
  }
}

TEST_CASE("face construction validates input") {
  CHECK_THROWS_AS(Face({1, 1, 2}), RangeError);
  CHECK_THROWS_AS(Face({0, 2}), RangeError);
  CHECK_THROWS_AS(Face({3, 65}), RangeError);
  CHECK(Face{3, 1, 2}.to_string() == "1 2 3");
}

TEST_CASE("complex validation") {
  CHECK_THROWS_AS(cx(4, 2, {{1, 2}}), ArityError);
  CHECK_THROWS_AS(cx(4, 1, {{1, 5}}), RangeError);
  Complex dup = cx(4, 1, {{1, 2}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(dup.size() == 3);
  CHECK_THROWS_AS(Complex(4, 1, {Face{1, 2}, Face{2, 3}}, Complex::Check::purity), PurityError);
}

TEST_CASE("labelings invert and compose") {
  std::mt19937_64 rng(7);
  Complex c = families::example("delta0");
  for (int t = 0; t < 20; ++t) {
    Labeling l = random_labeling(c.n(), rng);
    CHECK(relabel(relabel(c, l), l.inverse()) == c);
    CHECK(l.then(l.inverse()) == Labeling::identity(c.n()));
    CHECK(Labeling::from_order(l.order()) == l);
  }
  CHECK_THROWS_AS(Labeling::from_images({1, 1, 2}), RangeError);
  CHECK_THROWS_AS(parse_labeling("1,2", 3), RangeError);
  CHECK(parse_labeling("2,3,1", 3)(1) == 2);
}

TEST_CASE("k-skeleton") {
  Complex wheel = families::wheel(2, 3);
  CHECK(k_skeleton(wheel, 2) == wheel);
  CHECK(k_skeleton(wheel, 1) == families::example("g5"));
  Complex tet = cx(4, 3, {{1, 2, 3, 4}});
  CHECK(k_skeleton(tet, 1).size() == 6);
  CHECK_THROWS_AS(k_skeleton(tet, 0), RangeError);
  CHECK_THROWS_AS(k_skeleton(tet, 4), RangeError);
  Complex s = families::simplex_skeleton(6, 3);
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= j; ++k) CHECK(k_skeleton(k_skeleton(s, j), k) == k_skeleton(s, k));
  }
}

TEST_CASE("vertex deletion compresses labels") {
  Complex c = cx(5, 2, {{1, 2, 3}, {1, 3, 4}, {3, 4, 5}});
  Subcomplex r = delete_vertices(c, vertex_bit(2));
  CHECK(facet_strings(r.complex) == std::vector<std::string>{"1 2 3", "2 3 4"});
  CHECK(r.original == std::vector<Vertex>{1, 3, 4, 5});
  CHECK(delete_vertices(c, 0).complex == c);
  Subcomplex bad = delete_vertices(families::example("delta1"), vertex_bit(1));
  CHECK_FALSE(bad.complex.is_pure());
}

TEST_CASE("deleting in two steps equals deleting the union") {
  std::mt19937_64 rng(11);
  for (const Complex& c : generate_corpus({60, 7, 3})) {
    VertexMask a = rng() & full_mask(c.n());
    VertexMask b = rng() & full_mask(c.n()) & ~a;
    Subcomplex first = delete_vertices(c, a);
    VertexMask b_new = 0;
    for (int v = 1; v <= first.complex.n(); ++v) {
      if (b & vertex_bit(first.original[v - 1])) b_new |= vertex_bit(v);
    }
    Subcomplex twice = delete_vertices(first.complex, b_new);
    Subcomplex once = delete_vertices(c, a | b);
    CHECK(twice.complex == once.complex);
  }
}

TEST_CASE("induced subcomplex") {
  Complex b2 = families::ball(2);
  CHECK(induced_subcomplex(b2, full_mask(5)).complex == b2);
  CHECK(induced_subcomplex(families::simplex_skeleton(5, 2), full_mask(4)).complex == families::simplex_skeleton(4, 2));
  CHECK(facet_strings(induced_subcomplex(b2, full_mask(4)).complex) ==
        std::vector<std::string>{"1 2 3", "1 2 4", "1 3 4", "2 3 4"});
}

TEST_CASE("dual graph and strong connectivity") {
  CHECK(is_strongly_connected(families::simplex_skeleton(6, 2)));
  CHECK_FALSE(is_strongly_connected(families::example("delta1")));
  CHECK(is_strongly_connected(families::wheel(2, 3)));
  Complex nonpure = delete_vertices(families::example("delta1"), vertex_bit(1)).complex;
  CHECK_THROWS_AS(dual_graph(nonpure), PurityError);
  for (const Complex& c : generate_corpus({80, 7, 5})) {
    std::size_t brute = 0;
    for (std::size_t i = 0; i < c.facets().size(); ++i) {
      for (std::size_t j = i + 1; j < c.facets().size(); ++j) {
        brute += std::popcount(c.facets()[i].mask() & c.facets()[j].mask()) == c.d();
      }
    }
    CHECK(dual_graph(c).edges.size() == brute);
  }
}

TEST_CASE("ridge degrees in the complex with the last windows removed") {
  for (int n = 5; n <= 9; ++n) {
    int d = 2;
    Complex c = families::delta4(n, d);
    for (int i = n - d + 1; i <= n - 1; ++i) {
      Face mu = Face::from_mask(consecutive_face(n, d, i).mask() & consecutive_face(n, d, i + 1).mask());
      CHECK(ridge_degree(c, mu) == n - d - 2);
    }
    CHECK(ridge_degree(c, Face{2, 3}) == n - d);
  }
  Complex p = families::tight_path(5, 2);
  CHECK(ridge_degree(p, Face{1, 5}) == 0);
  CHECK_THROWS_AS(ridge_degree(p, Face{1}), ArityError);
}

TEST_CASE("facet to vertex distance") {
  Complex path = families::tight_path(7, 2);
  auto zero = facet_vertex_distance(path, Face{1, 2, 3}, 2);
  CHECK(zero.distance == 0);
  auto far = facet_vertex_distance(path, Face{1, 2, 3}, 7);
  CHECK(far.distance == 4);
  CHECK(far.ascending);
  CHECK_FALSE(far.descending);
  auto none = facet_vertex_distance(families::example("delta1"), Face{1, 4, 7}, 5);
  CHECK_FALSE(none.distance.has_value());
}

TEST_CASE("parsing") {
  Complex c = parse_complex("# comment\n2 5\n1 2 3\n\n2 3 4 # tail\n3 4 5\n");
  CHECK(c.n() == 5);
  CHECK(c.size() == 3);
  CHECK(parse_complex(format_complex(c)) == c);
  auto line_of = [](const std::string& text) {
    try {
      parse_complex(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("2 5\n1 2 3\n1 2\n") == 3);
  CHECK(line_of("2 5\n1 2 x\n") == 2);
  CHECK(line_of("2 5\n1 2 6\n") == 2);
  CHECK(line_of("2 5\n3 2 1\n") == 2);
  CHECK(line_of("2 5\n1 2 3\n1 2 3\n") == 3);
  CHECK(line_of("# only\n") == 1);
}
