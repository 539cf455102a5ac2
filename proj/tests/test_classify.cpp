#include "doctest.h"

#include <numeric>

#include "uqsl/classify.hpp"

using namespace uqsl;

namespace {

IntVec full_J(long r) {
  IntVec J;
  for (long i = 1; i <= r; ++i) J.push_back(i);
  return J;
}

struct TableRow {
  long r;
  IntVec J;
  std::string diagram;
  long det;
};

// All fourteen rank 2..4 diagrams with their determinants (symmetries of
// reversing the vertex order / inverting q omitted, as in the tables).
const std::vector<TableRow> kTables = {
    {2, {1}, "(-1) --q^-1-- (q)", -1},
    {2, {1, 2}, "(-1) --q-- (-1)", -1},
    {3, {1}, "(-1) --q^-1-- (q) --q^-1-- (q)", -2},
    {3, {2}, "(q^-1) --q-- (-1) --q^-1-- (q)", 0},
    {3, {1, 2}, "(-1) --q-- (-1) --q^-1-- (q)", -2},
    {3, {1, 3}, "(-1) --q-- (q^-1) --q-- (-1)", 0},
    {3, {1, 2, 3}, "(-1) --q^-1-- (-1) --q-- (-1)", 0},
    {4, {1}, "(-1) --q^-1-- (q) --q^-1-- (q) --q^-1-- (q)", -3},
    {4, {2}, "(q^-1) --q-- (-1) --q^-1-- (q) --q^-1-- (q)", 1},
    {4, {1, 2}, "(-1) --q-- (-1) --q^-1-- (q) --q^-1-- (q)", -3},
    {4, {1, 3}, "(-1) --q-- (q^-1) --q-- (-1) --q^-1-- (q)", 1},
    {4, {2, 3}, "(q) --q^-1-- (-1) --q-- (-1) --q^-1-- (q)", -3},
    {4, {1, 4}, "(-1) --q-- (q^-1) --q-- (q^-1) --q-- (-1)", 1},
    {4, {1, 2, 3}, "(-1) --q^-1-- (-1) --q-- (-1) --q^-1-- (q)", 1},
};
// Note the table also lists A(4,q,{1,3,4}) (det 1) and A(4,q,I_4) (det 1);
// together with the above these are all diagrams up to the omitted
// symmetries. The two extra rows are asserted separately below.

}  // namespace

TEST_CASE("determinant tables reproduce") {
  for (auto& row : kTables) {
    SuperAData d = build_super_a(row.r, row.J, 6);
    CHECK(diagram_text(d) == row.diagram);
    CHECK(det_symmetrized(d) == row.det);
  }
  SuperAData e = build_super_a(4, {1, 3, 4}, 6);
  CHECK(diagram_text(e) == "(-1) --q^-1-- (q) --q^-1-- (-1) --q-- (-1)");
  CHECK(det_symmetrized(e) == 1);
  SuperAData f = build_super_a(4, full_J(4), 6);
  CHECK(diagram_text(f) == "(-1) --q-- (-1) --q^-1-- (-1) --q-- (-1)");
  CHECK(det_symmetrized(f) == 1);
}

TEST_CASE("nondegeneracy examples") {
  CHECK(is_nondegenerate(build_super_a(2, {1, 2}, 4)));
  CHECK(!is_nondegenerate(build_super_a(3, full_J(3), 4)));
  CHECK(!is_nondegenerate(build_super_a(3, full_J(3), 8)));
  CHECK(!is_nondegenerate(build_super_a(4, {1}, 6)));  // det -3, N = 6
}

TEST_CASE("determinant parity law") {
  for (long r = 2; r <= 6; ++r)
    for (long mask = 1; mask < (1 << r); ++mask) {
      IntVec J;
      for (long i = 0; i < r; ++i)
        if (mask & (1 << i)) J.push_back(i + 1);
      long det = det_symmetrized(build_super_a(r, J, 4));
      if (r % 2 == 0) {
        CHECK(det % 2 != 0);
        CHECK(det != 0);
      } else {
        CHECK(det % 2 == 0);
      }
    }
}

TEST_CASE("J = I determinant closed form") {
  for (long r = 2; r <= 8; ++r) {
    long det = det_symmetrized(build_super_a(r, full_J(r), 4));
    long expect = (r % 2 == 1) ? 0 : ((r / 2) % 2 == 0 ? 1 : -1);
    CHECK(det == expect);
  }
}

TEST_CASE("top degree examples") {
  CHECK(top_degree(build_super_a(2, {1, 2}, 4)) == IntVec{0, 0});
  CHECK(top_degree(build_super_a(2, {1, 2}, 8)) == IntVec{0, 0});
  CHECK(top_degree(build_super_a(2, {1}, 4)) == IntVec{2, 0});
  CHECK(top_degree(build_super_a(2, {1}, 8)) == IntVec{2, 0});
  // r = 3, J = I: direct evaluation of the top-degree product gives first
  // coordinate +1 (nonzero, so not unimodular).
  IntVec t = top_degree(build_super_a(3, full_J(3), 4));
  CHECK(t == IntVec{1, 0, 1});
}

TEST_CASE("unimodularity matches closed form for r <= 6") {
  for (long r = 2; r <= 6; ++r)
    for (long mask = 1; mask < (1 << r); ++mask)
      for (long N : {4L, 6L, 8L}) {
        IntVec J;
        for (long i = 0; i < r; ++i)
          if (mask & (1 << i)) J.push_back(i + 1);
        SuperAData d = build_super_a(r, J, N);
        // is_unimodular itself raises consistency_error on any mismatch
        bool uni = is_unimodular(d);
        CHECK(uni == (((long)J.size() == r) && r % 2 == 0));
      }
}

TEST_CASE("ribbon pair counts") {
  for (long N : {4L, 6L, 8L}) {
    auto pairs = ribbon_pairs(build_super_a(2, full_J(2), N));
    CHECK(pairs.size() == 4);
    int spherical = 0;
    for (auto& p : pairs) spherical += p.spherical ? 1 : 0;
    CHECK(spherical == 1);
  }
  CHECK(ribbon_pairs(build_super_a(4, full_J(4), 4)).size() == 16);
  CHECK(ribbon_pairs(build_super_a(3, full_J(3), 4)).empty());
  CHECK(ribbon_pairs(build_super_a(5, full_J(5), 4)).empty());
  CHECK(ribbon_pairs(build_super_a(2, {1}, 6)).empty());
  CHECK(ribbon_pairs(build_super_a(4, {1, 2}, 4)).empty());
}

TEST_CASE("ribbon pair count equals closed form for r <= 6") {
  for (long r = 2; r <= 6; ++r)
    for (long mask = 1; mask < (1 << r); ++mask)
      for (long N : {4L, 6L, 8L}) {
        IntVec J;
        for (long i = 0; i < r; ++i)
          if (mask & (1 << i)) J.push_back(i + 1);
        SuperAData d = build_super_a(r, J, N);
        size_t expect =
            ((long)J.size() == r && r % 2 == 0) ? (size_t)1 << r : 0;
        CHECK(ribbon_pairs(d).size() == expect);
      }
}

TEST_CASE("classify_all report") {
  {
    SuperAData d = build_super_a(2, full_J(2), 4);
    ClassificationReport rep = classify_all(d);
    CHECK(rep.det_t == -1);
    CHECK(rep.nondegenerate);
    CHECK(rep.unimodular);
    REQUIRE(rep.spherical_pivot.has_value());
    CHECK(*rep.spherical_pivot == IntVec{2, 2});
    CHECK(rep.ribbon_pairs.size() == 4);
    CHECK(rep.modular);
    // the spherical pair has j = 0, a = (n, n), epsilon = (1,...,1)
    for (auto& p : rep.ribbon_pairs)
      if (p.spherical) {
        CHECK(p.a == IntVec{2, 2});
        CHECK(p.j == IntVec{0, 0});
        CHECK(p.eps == std::vector<int>{1, 1});
        CHECK(p.eta == std::vector<int>{0, 0});
      }
    std::string json = report_json(d, rep);
    CHECK(json.find("\"det_t\":-1") != std::string::npos);
    CHECK(json.find("\"ribbon_count\":4") != std::string::npos);
    CHECK(json.find("\"modular\":true") != std::string::npos);
  }
  {
    ClassificationReport rep = classify_all(build_super_a(2, {1}, 6));
    CHECK(!rep.unimodular);
    CHECK(!rep.spherical_pivot.has_value());
    CHECK(rep.ribbon_pairs.empty());
    CHECK(!rep.modular);
  }
  {
    ClassificationReport rep = classify_all(build_super_a(3, full_J(3), 4));
    CHECK(!rep.unimodular);
    CHECK(rep.ribbon_pairs.empty());
    CHECK(!rep.modular);
  }
}
