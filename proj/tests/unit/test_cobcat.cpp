#include <random>

#include "doctest.h"
#include "shc/cobcat/parser.hpp"
#include "shc/cobcat/serialize.hpp"
#include "cob_support.hpp"

using namespace shc::cob;
using namespace shc::testing;

namespace {

Component comp(int g, std::vector<std::size_t> in, std::vector<std::size_t> out) { return {g, in, out}; }


}  // namespace

TEST_CASE("parse examples") {
  Cobordism cyl = parse("cyl");
  REQUIRE(cyl.components().size() == 1);
  CHECK(cyl.components()[0] == comp(0, {0}, {0}));
  CHECK(parse("pants ; (cap | cyl)") == Cobordism::cyl());
  Cobordism torus = parse("pants ; copants");
  CHECK(torus.components() == std::vector<Component>{comp(1, {0}, {0})});
  CHECK(parse("genus(2; 0, 0)").euler_characteristic() == -2);
  CHECK(parse("  ( cyl|cyl ) ;copants") == Cobordism::copants());
  CHECK(parse("cup | cup ; pants | cyl").target().size() == 3);
}

TEST_CASE("parse errors report positions") {
  auto position = [](const std::string& s) {
    try {
      parse(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("pants ; cap") == 6);
  CHECK(position("cyl ;") == 5);
  CHECK(position("torus") == 0);
  CHECK(position("genus(1; 1 0)") == 11);
  CHECK(position("(cyl") == 4);
  CHECK(position("cyl $") == 4);
  CHECK(position("cyl cyl") == 4);
  CHECK(position("nf(+ -> +){g0: 0 ->}") == 0);
}

TEST_CASE("composition examples") {
  CHECK(compose(Cobordism::cyl(), Cobordism::cyl()) == Cobordism::cyl());
  Cobordism sphere = compose(Cobordism::cup(), Cobordism::cap());
  CHECK(sphere.components() == std::vector<Component>{comp(0, {}, {})});
  CHECK(sphere.euler_characteristic() == 2);

  Cobordism t = trace(Cobordism::pants(), 0, 1);
  CHECK(t == Cobordism::surface(1, 1, 0));
  CHECK(t.euler_characteristic() == Cobordism::pants().euler_characteristic());
  Cobordism two = trace(tensor(Cobordism::cup(), Cobordism::cup()), 0, 1);
  CHECK(two.components() == std::vector<Component>{comp(0, {}, {})});
  CHECK(trace(Cobordism::surface(2, 0, 3), 0, 2) == Cobordism::surface(3, 0, 1));

  CHECK_THROWS_AS(compose(Cobordism::pants(), Cobordism::cap()), ArityMismatch);
  CHECK_THROWS_AS(compose(reverse_circle(Cobordism::cyl(), Side::Out, 0), Cobordism::cyl()), NonOrientableGluing);
  CHECK_THROWS_AS(Cobordism(ClosedObject::circles(1), ClosedObject::circles(0), {}), MalformedCobordism);
  CHECK_THROWS_AS(Cobordism(ClosedObject::circles(1), ClosedObject::circles(0), {comp(0, {0}, {}), comp(0, {0}, {})}),
                  MalformedCobordism);
}

TEST_CASE("normal form ignores component order") {
  Cobordism a(ClosedObject::circles(2), ClosedObject::circles(2), {comp(1, {1}, {0}), comp(0, {0}, {1}), comp(2, {}, {})});
  Cobordism b(ClosedObject::circles(2), ClosedObject::circles(2), {comp(2, {}, {}), comp(0, {0}, {1}), comp(1, {1}, {0})});
  CHECK(a == b);
  CHECK(print(a) == "nf(+ + -> + +){g0: 0 -> 1}{g1: 1 -> 0}{g2: ->}");
}

TEST_CASE("presentations") {
  Cobordism cyl = Cobordism::cyl();
  auto p = to_cospan(cyl);
  REQUIRE(p.components.size() == 1);
  const auto& c = p.components[0];
  CHECK(c.generators == std::vector<std::string>{"c1"});
  CHECK(c.relators.empty());
  CHECK(c.boundary[0].boundary == Word::generator(0));
  CHECK(c.boundary[1].boundary == Word::generator(0).inverse());
  CHECK(c.boundary[0].holonomy == c.boundary[1].holonomy);
  CHECK(c.boundary[0].sign == -1);
  CHECK(c.boundary[1].sign == 1);

  auto pants = to_cospan(Cobordism::pants()).components[0];
  CHECK(pants.rank() == 2);
  Word c1 = Word::generator(0), c2 = Word::generator(1);
  CHECK(pants.boundary[0].boundary == c1);
  CHECK(pants.boundary[1].boundary == c2);
  CHECK(pants.boundary[2].boundary == (c1 * c2).inverse());

  auto holed = to_cospan(Cobordism::surface(1, 1, 0)).components[0];
  CHECK(holed.generators == std::vector<std::string>{"a1", "b1"});
  CHECK(holed.boundary[0].holonomy == commutator(Word::generator(0), Word::generator(1)));
  CHECK(holed.boundary[0].holonomy.to_string(holed.generators) == "a1 b1 a1^-1 b1^-1");

  auto closed = to_cospan(Cobordism::surface(2, 0, 0)).components[0];
  CHECK(closed.rank() == 4);
  REQUIRE(closed.relators.size() == 1);
  CHECK(closed.relators[0].length() == 8);
  CHECK(closed.relator_holds());
}

TEST_CASE("relative orientation") {
  auto r = relative_orientation(Cobordism::cyl());
  CHECK(r.sign(Side::In, 0) == -1);
  CHECK(r.sign(Side::Out, 0) == 1);
  auto flipped = relative_orientation(reverse_circle(Cobordism::cyl(), Side::In, 0));
  CHECK(flipped.sign(Side::In, 0) == 1);
  CHECK(flipped.sign(Side::Out, 0) == 1);

  Cobordism first = parse("pants"), second = parse("copants");
  auto comp_r = composite_orientation(first, second);
  CHECK(comp_r.signs.size() == 2);
  CHECK(comp_r.sign(Side::In, 0) == relative_orientation(first).sign(Side::In, 0));
  CHECK(comp_r.sign(Side::Out, 0) == relative_orientation(second).sign(Side::Out, 0));

  // Reversed circles on both sides of a gluing still cancel.
  Cobordism l = reverse_circle(Cobordism::pants(), Side::Out, 1);
  Cobordism rr = reverse_circle(Cobordism::copants(), Side::In, 1);
  CHECK(composite_orientation(l, rr).signs.size() == 2);
}

TEST_CASE("category laws over the generator set") {
  auto set = generator_set();
  std::size_t triples = 0;
  for (const auto& a : set) {
    CHECK(compose(Cobordism::identity(a.source()), a) == a);
    CHECK(compose(a, Cobordism::identity(a.target())) == a);
    for (const auto& b : set) {
      if (!composable(a, b)) continue;
      Cobordism ab = compose(a, b);
      CHECK(ab.euler_characteristic() == a.euler_characteristic() + b.euler_characteristic());
      for (const auto& c : set) {
        if (!composable(b, c)) continue;
        ++triples;
        CHECK(compose(ab, c) == compose(a, compose(b, c)));
      }
    }
  }
  CHECK(triples > 1000);
}

TEST_CASE("monoidal interchange") {
  auto set = generator_set();
  std::mt19937_64 rng(4);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 300; ++trial) {
    const auto& a = set[rng() % set.size()];
    const auto& b = set[rng() % set.size()];
    const auto& c = set[rng() % set.size()];
    const auto& d = set[rng() % set.size()];
    if (!composable(a, c) || !composable(b, d)) continue;
    ++checked;
    CHECK(compose(tensor(a, b), tensor(c, d)) == tensor(compose(a, c), compose(b, d)));
  }
  CHECK(checked >= 100);
}

TEST_CASE("parse and print round trip") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    Expr e = random_expression(rng() % 3, static_cast<int>(rng() % 4), rng);
    INFO(e.text);
    Cobordism c = parse(e.text);
    CHECK(c.euler_characteristic() == e.chi);
    CHECK(c.target().size() == e.out);
    std::string s = print(c);
    CHECK(parse(s) == c);
    CHECK(print(parse(s)) == s);
  }
}

TEST_CASE("presentations satisfy the standard relator") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    auto p = to_cospan(random_normal_form(rng));
    for (const auto& c : p.components) {
      CHECK(c.relator_holds());
      std::size_t b = c.boundary.size();
      if (b > 0) CHECK(c.rank() == static_cast<std::size_t>(2 * c.genus) + b - 1);
      for (const auto& w : c.boundary) CHECK(w.holonomy == w.boundary.power(w.sign));
    }
  }
}

TEST_CASE("one-dimensional cobordisms") {
  ClosedObject pts{0, {1, -1}};
  Cobordism id = Cobordism::identity(pts);
  CHECK(id.dim() == 0);
  CHECK(id.euler_characteristic() == 2);
  Cobordism elbow(pts, ClosedObject{0, {}}, {comp(0, {0, 1}, {})});
  Cobordism coelbow(ClosedObject{0, {}}, pts, {comp(0, {}, {0, 1})});
  Cobordism loop = compose(coelbow, elbow);
  CHECK(loop.components() == std::vector<Component>{comp(0, {}, {})});
  CHECK(loop.euler_characteristic() == 0);
  CHECK(compose(Cobordism::interval(), Cobordism::interval()) == Cobordism::interval());
  CHECK(compose(id, id) == id);
  CHECK_THROWS_AS(Cobordism(ClosedObject{0, {1, 1}}, ClosedObject{0, {}}, {comp(0, {0, 1}, {})}), NonOrientableGluing);
  CHECK(parse(print(elbow)) == elbow);
  CHECK(print(Cobordism::interval()) == "nf0(+ -> +){g0: 0 -> 0}");
  auto p = to_cospan(loop);
  CHECK(p.components[0].rank() == 1);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Cobordism c = random_normal_form(rng);
    CHECK(cobordism_from_json(to_json(c)) == c);
  }
  auto j = to_json(to_cospan(Cobordism::pants()));
  CHECK(j["components"][0]["boundary"][2]["boundary"] == "c2^-1 c1^-1");
  CHECK_THROWS_AS(cobordism_from_json(nlohmann::json::parse(R"({"source": [1]})")), MalformedCobordism);
}
