#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "reeunital/incidence.hpp"
#include "reeunital/permgroup.hpp"

using namespace reeunital;

namespace {
// the Fano plane: smallest nontrivial 2-(7,3,1) design
IncidenceStructure fano() {
  return IncidenceStructure(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}
}  // namespace

TEST_CASE("2-design verification accepts the Fano plane") {
  DesignCheck chk = verify_2design(fano());
  REQUIRE(chk.ok);
  REQUIRE(chk.params == DesignParams{7, 7, 3, 3, 1});
}

TEST_CASE("2-design verification pinpoints failures") {
  // remove a block: some pair is uncovered
  IncidenceStructure s(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                           {1, 4, 6}, {2, 3, 6}});
  REQUIRE_FALSE(verify_2design(s).ok);

  // constant degrees but a doubled pair: K4 edges with {0,2},{1,3}
  // replaced by second copies of {0,1},{2,3}
  IncidenceStructure t(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {1, 2}, {0, 3}});
  DesignCheck chk = verify_2design(t);
  REQUIRE_FALSE(chk.ok);
  REQUIRE(chk.failure.find("pair") != std::string::npos);

  REQUIRE_THROWS_AS(IncidenceStructure(3, {{0, 3}}), std::invalid_argument);
  REQUIRE_THROWS_AS(IncidenceStructure(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("configuration validation compares degree multisets") {
  IncidenceStructure f = fano();
  Configuration cfg{{0, 1, 3}, {0, 1, 3}};  // a triangle in the Fano plane
  REQUIRE(validate_configuration(f, cfg, {{2, 2, 2}, {2, 2, 2}}));
  REQUIRE_FALSE(validate_configuration(f, cfg, {{2, 2, 2}, {3, 2, 1}}));
  REQUIRE_THROWS_AS(
      validate_configuration(f, Configuration{{9}, {}}, {{0}, {}}),
      std::invalid_argument);
}

TEST_CASE("dual-K3 exists in the Fano plane, dual-K4 does not") {
  auto r3 = find_dual_kn(fano(), 3);
  REQUIRE(r3.status == SearchStatus::Found);
  REQUIRE(r3.witness->blocks.size() == 3);
  REQUIRE(r3.witness->points.size() == 3);

  // the dual of a quadrangle: 4 lines, no 3 concurrent
  auto r4 = find_dual_kn(fano(), 4);
  REQUIRE(r4.status == SearchStatus::Found);
  REQUIRE(r4.witness->points.size() == 6);

  // dual K5 needs 10 distinct meeting points; the plane has only 7
  auto r5 = find_dual_kn(fano(), 5);
  REQUIRE(r5.status == SearchStatus::NoneExists);

  auto starved = find_dual_kn(fano(), 3, 2);
  REQUIRE(starved.status == SearchStatus::Undecided);
  REQUIRE(starved.nodes <= 2);
}

TEST_CASE("isomorphism search finds a relabeling of the Fano plane") {
  IncidenceStructure a = fano();
  // relabel points by the cycle (0 1 2 3 4 5 6)
  std::vector<std::vector<int>> blocks;
  for (auto blk : a.blocks) {
    for (int& p : blk) p = (p + 1) % 7;
    blocks.push_back(blk);
  }
  IncidenceStructure b(7, blocks);
  auto bij = isomorphism_search(a, b);
  REQUIRE(bij.has_value());
  REQUIRE(is_block_preserving(a, b, bij->image));

  // a non-design of the same shape is not isomorphic
  IncidenceStructure c(7, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5},
                           {0, 1, 6}, {2, 3, 4}, {2, 3, 5}});
  REQUIRE_FALSE(isomorphism_search(a, c).has_value());
}

TEST_CASE("incidence file round trip") {
  IncidenceStructure f = fano();
  std::stringstream ss;
  write_incidence(ss, f, {"seven points", "seven lines"});
  IncidenceStructure g = read_incidence(ss);
  REQUIRE(g.v == f.v);
  REQUIRE(g.blocks == f.blocks);

  std::stringstream bad("not a header\n");
  REQUIRE_THROWS_AS(read_incidence(bad), std::invalid_argument);
}

TEST_CASE("permutation group closure and pair orbits") {
  // S_3 on 3 points
  std::vector<Perm> gens{{1, 0, 2}, {1, 2, 0}};
  auto grp = generate_permutation_group(gens);
  REQUIRE(grp.size() == 6);
  REQUIRE(ordered_pair_orbit_size(gens) == 6);  // doubly transitive

  REQUIRE_THROWS_AS(generate_permutation_group(gens, 4), std::runtime_error);

  Perm f{1, 2, 0}, g{0, 2, 1};
  Perm fg = perm_compose(f, g);
  REQUIRE(fg == Perm{2, 1, 0});
}
