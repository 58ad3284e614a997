#include <doctest.h>

#include <string>
#include <vector>

#include "pauliset/commuting.hpp"
#include "pauliset/errors.hpp"
#include "pauliset/group.hpp"
#include "pauliset/oracle.hpp"
#include "pauliset/pauli.hpp"
#include "pauliset/rng.hpp"

using namespace pauliset;

namespace {

PauliSet set_of(std::initializer_list<const char*> elems) {
  PauliSet out;
  for (const char* e : elems) out.insert(Pauli::parse(e));
  return out;
}

}  // namespace

TEST_CASE("is commuting") {
  CHECK(is_commuting(set_of({"ii", "xx", "zz", "yy"})));
  CHECK_FALSE(is_commuting(set_of({"x", "y"})));
  CHECK(is_commuting(PauliSet(2)));
  CHECK(is_commuting(set_of({"xy"})));
}

TEST_CASE("is maximally commuting") {
  CHECK(is_maximally_commuting(set_of({"i", "z"})));
  CHECK(is_maximally_commuting(set_of({"ii", "xx", "zz", "yy"})));
  CHECK_FALSE(is_maximally_commuting(set_of({"ii", "xx"})));
  CHECK_FALSE(is_maximally_commuting(set_of({"i", "x", "z"})));
  CHECK_FALSE(is_maximally_commuting(PauliSet(1)));
}

TEST_CASE("decompose") {
  const Decomposition d = decompose(set_of({"ii", "xx", "zz", "yy"}));
  CHECK(d.c_i == set_of({"i"}));
  CHECK(d.c_x == set_of({"x"}));
  CHECK(d.c_y == set_of({"y"}));
  CHECK(d.c_z == set_of({"z"}));

  const Decomposition e = decompose(set_of({"xx", "xy", "xz", "yi", "zi"}));
  CHECK(e.c_i.empty());
  CHECK(e.c_x == set_of({"x", "y", "z"}));
  CHECK(e.c_y.size() == 1);
  CHECK(e.c_y[0].is_identity());
  CHECK(e.c_z.size() == 1);

  const Decomposition f = decompose(set_of({"ii"}));
  CHECK(f.c_i == set_of({"i"}));
  CHECK(f.c_x.empty());
  CHECK(f.c_y.empty());
  CHECK(f.c_z.empty());

  CHECK_THROWS_AS(decompose(set_of({"x", "y"})), DimensionError);
}

TEST_CASE("decompose uvw ordering puts empty parts last") {
  const Decomposition d = decompose(set_of({"ix", "zi", "zx", "ii"}));
  CHECK(std::string(d.uvw.begin(), d.uvw.end()) == "zxy");
  CHECK(d.u() == d.c_z);
  CHECK(d.v().empty());
  CHECK(d.w().empty());

  const Decomposition full = decompose(set_of({"ii", "xx", "zz", "yy"}));
  CHECK(std::string(full.uvw.begin(), full.uvw.end()) == "xyz");
}

TEST_CASE("decompose round-trips through reassemble") {
  for (const char* text : {"ii\nxx\nzz\nyy", "xx\nxy\nxz\nyi\nzi",
                           "ix\nzi\nzx\nii", "iii\nxxi\nzzi\nyyi"}) {
    const PauliSet s = PauliSet::parse(text);
    CHECK(decompose(s).reassemble() == s);
  }
}

TEST_CASE("verify commuting structure case b") {
  const CommutingStructureReport r =
      verify_commuting_structure(set_of({"ii", "xi", "ix", "xx"}));
  CHECK(r.case_label == 'b');
  CHECK(r.part_sizes[0] == 2);
  CHECK(r.part_sizes[1] == 2);
  CHECK(r.part_sizes[2] == 0);
  CHECK(r.part_sizes[3] == 0);
}

TEST_CASE("verify commuting structure case c") {
  const CommutingStructureReport r =
      verify_commuting_structure(set_of({"ii", "xx", "zz", "yy"}));
  CHECK(r.case_label == 'c');
  for (std::size_t size : r.part_sizes) CHECK(size == 1);
}

TEST_CASE("verify commuting structure rejects bad input") {
  CHECK_THROWS_AS(verify_commuting_structure(set_of({"ii", "zi"})),
                  ArgumentError);
  CHECK_THROWS_AS(verify_commuting_structure(set_of({"i", "z"})),
                  ArgumentError);
}

TEST_CASE("verify commuting structure covers every n=2 and n=3 subgroup") {
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    std::size_t case_b = 0, case_c = 0;
    for (const PauliSet& s : oracle::enumerate_maximal_commuting(n)) {
      const CommutingStructureReport r = verify_commuting_structure(s);
      (r.case_label == 'b' ? case_b : case_c) += 1;
    }
    CHECK(case_b > 0);
    CHECK(case_c > 0);
    CHECK(case_b + case_c == (n == 2 ? 15 : 135));
  }
}

TEST_CASE("maximal commuting sets are subgroups with identity product") {
  for (const PauliSet& s : oracle::enumerate_maximal_commuting(2)) {
    for (const Pauli& a : s)
      for (const Pauli& b : s) CHECK(s.contains(a * b));
    CHECK(product_of_set(s).is_identity());
  }
}

TEST_CASE("lift commuting") {
  CHECK(lift_commuting(set_of({"i", "z"}), 'x') ==
        set_of({"ii", "iz", "xi", "xz"}));
  CHECK(lift_commuting(set_of({"i", "x"}), 'z') ==
        set_of({"ii", "ix", "zi", "zx"}));
  CHECK_THROWS_AS(lift_commuting(set_of({"i", "x", "z"}), 'x'), ArgumentError);
  CHECK_THROWS_AS(lift_commuting(set_of({"i", "z"}), 'q'), ArgumentError);

  const PauliSet lifted = lift_commuting(set_of({"ii", "xx", "zz", "yy"}), 'y');
  CHECK(is_maximally_commuting(lifted));
  CHECK(lifted.size() == 8);
}

TEST_CASE("compose commuting") {
  CHECK(compose_commuting(set_of({"i"}), set_of({"x"}), set_of({"y"}),
                          set_of({"z"}), {'x', 'y', 'z'}) ==
        set_of({"ii", "xx", "yy", "zz"}));
  CHECK(compose_commuting(set_of({"i"}), set_of({"x"}), set_of({"y"}),
                          set_of({"z"}), {'y', 'z', 'x'}) ==
        set_of({"ii", "xy", "yz", "zx"}));

  for (const auto& perm :
       {std::array<char, 3>{'x', 'z', 'y'}, std::array<char, 3>{'z', 'y', 'x'}})
    CHECK(is_maximally_commuting(
        compose_commuting(set_of({"i"}), set_of({"x"}), set_of({"y"}),
                          set_of({"z"}), perm)));

  CHECK_THROWS_AS(compose_commuting(set_of({"i"}), set_of({"x"}),
                                    set_of({"y"}), set_of({"z"}),
                                    {'x', 'x', 'z'}),
                  ArgumentError);
  CHECK_THROWS_AS(compose_commuting(set_of({"i", "x"}), set_of({"x"}),
                                    set_of({"y"}), set_of({"z"}),
                                    {'x', 'y', 'z'}),
                  ArgumentError);
  CHECK_THROWS_AS(compose_commuting(PauliSet(1), set_of({"x"}), set_of({"y"}),
                                    set_of({"z"}), {'x', 'y', 'z'}),
                  ArgumentError);
  // Pattern violation: c_x and c_y contents must anticommute pairwise.
  CHECK_THROWS_WITH_AS(
      compose_commuting(set_of({"i"}), set_of({"x"}), set_of({"x"}),
                        set_of({"z"}), {'x', 'y', 'z'}),
      doctest::Contains("must"), ArgumentError);
}

TEST_CASE("compose round-trips decompose on every n=2 maximal subgroup") {
  for (const PauliSet& s : oracle::enumerate_maximal_commuting(2)) {
    const Decomposition d = decompose(s);
    if (d.c_x.empty() || d.c_y.empty() || d.c_z.empty()) continue;
    CHECK(compose_commuting(d.c_i, d.c_x, d.c_y, d.c_z, {'x', 'y', 'z'}) == s);
  }
}

TEST_CASE("random maximal commuting is seeded and valid") {
  Rng a(11), b(11), c(12);
  const PauliSet s1 = random_maximal_commuting(3, a);
  const PauliSet s2 = random_maximal_commuting(3, b);
  CHECK(s1 == s2);
  CHECK(s1.str() == s2.str());
  CHECK(is_maximally_commuting(s1));
  CHECK(is_maximally_commuting(random_maximal_commuting(4, c)));
  CHECK_THROWS_AS(random_maximal_commuting(0, a), ArgumentError);
  CHECK_THROWS_AS(random_maximal_commuting(40, a), CapacityError);
}

TEST_CASE("random maximal commuting covers all three subgroups at n=1") {
  Rng rng(5);
  bool seen[3] = {false, false, false};
  for (int k = 0; k < 60; ++k) {
    const PauliSet s = random_maximal_commuting(1, rng);
    CHECK(s.size() == 2);
    for (const Pauli& p : s) {
      if (p.is_identity()) continue;
      const char c = p.factor(0);
      seen[c == 'x' ? 0 : c == 'y' ? 1 : 2] = true;
    }
  }
  CHECK(seen[0]);
  CHECK(seen[1]);
  CHECK(seen[2]);
}
