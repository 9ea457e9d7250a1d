#include <gtest/gtest.h>

#include <map>
#include <string>

#include "qcforge/codec.hpp"
#include "qcforge/distance.hpp"
#include "qcforge/matrix.hpp"
#include "qcforge/qc.hpp"
#include "qcforge/records.hpp"

using namespace qcforge;

namespace {
const std::string kData = QCFORGE_SOURCE_DATA_DIR;
}

TEST(Corpus, QcTablesParseAndDimensionsMatch) {
  LoadResult got = load_records(kData + "/tables1-3.records");
  EXPECT_TRUE(got.notices.empty());
  ASSERT_EQ(got.records.size(), 38u);

  std::map<std::string, int> by_source;
  for (const auto& r : got.records) {
    ++by_source[r.source];
    EXPECT_EQ(r.q, 2);
    EXPECT_EQ(r.prov, Provenance::qc);
    EXPECT_EQ(r.n, r.m * r.ell);
    const Field& f = Field::of(r.q);
    Poly g = decode_gen(r.g, f);
    EXPECT_EQ(r.k, r.m - g.degree()) << "[" << r.n << "," << r.k << "," << r.d << "]";
    for (const auto& s : r.fs) {
      Poly fi = decode_gen(s, f);
      EXPECT_LT(fi.is_zero() ? -1 : fi.degree(), r.m - g.degree()) << "f too long in n=" << r.n;
    }
    if (r.n == 110 && r.k == 40)
      EXPECT_TRUE(r.suspect);
    else
      EXPECT_FALSE(r.suspect);
  }
  EXPECT_EQ(by_source["table1"], 30);
  EXPECT_EQ(by_source["table2"], 6);
  EXPECT_EQ(by_source["table3"], 2);

  for (const auto& r : got.records) {
    if (r.source == "table1")
      EXPECT_EQ(r.properties, std::vector<std::string>{"lcd"});
    else if (r.source == "table2")
      EXPECT_EQ(r.properties, std::vector<std::string>{"self-orthogonal"});
    else
      EXPECT_EQ(r.properties, (std::vector<std::string>{"self-orthogonal", "reversible"}));
  }
}

TEST(Corpus, TupleTableRebuildsWithStatedDimensions) {
  LoadResult got = load_records(kData + "/table7.records");
  EXPECT_TRUE(got.notices.empty());
  ASSERT_EQ(got.records.size(), 31u);

  for (const auto& r : got.records) {
    EXPECT_EQ(r.prov, Provenance::qc_tuple);
    EXPECT_EQ(r.source, "table7");
    EXPECT_FALSE(r.pair.empty());
    EXPECT_FALSE(r.role.empty());
    QCSpec spec = qc_spec_from_record(r);
    if (r.k_alt != 0) {
      // one GF(5) row is labeled [78,18,40] but its generators span the
      // dimension-16 code that the construction tables actually use
      EXPECT_EQ(spec.dim(), r.k_alt) << "pair " << r.pair;
    } else {
      EXPECT_EQ(spec.dim(), r.k) << "[" << r.n << "," << r.k << "," << r.d << "]_" << r.q
                                 << " pair " << r.pair;
    }
  }
}

TEST(Corpus, TuplePairsAreNestedWithExactOffsets) {
  LoadResult got = load_records(kData + "/table7.records");
  std::map<std::string, const CodeRecord*> originals;
  for (const auto& r : got.records)
    if (r.role == "original") {
      EXPECT_EQ(originals.count(r.pair), 0u) << "duplicate original for " << r.pair;
      originals[r.pair] = &r;
    }

  int checked = 0;
  for (const auto& r : got.records) {
    if (r.role == "original") continue;
    ASSERT_TRUE(originals.count(r.pair)) << r.pair;
    const CodeRecord& base = *originals[r.pair];
    QCSpec inner = qc_spec_from_record(r.role == "super" ? base : r);
    QCSpec outer = qc_spec_from_record(r.role == "super" ? r : base);
    GenMatrix gi = build_qc_matrix(inner);
    GenMatrix go = build_qc_matrix(outer);
    EXPECT_TRUE(is_subspace(gi, go)) << r.pair;
    EXPECT_GE(outer.dim() - inner.dim(), 1) << r.pair;
    EXPECT_EQ(rank(gi), size_t(inner.dim())) << r.pair;
    EXPECT_EQ(rank(go), size_t(outer.dim())) << r.pair;
    ++checked;
  }
  EXPECT_EQ(checked, 16);  // 15 pairs plus the three-member family's second supercode
}

TEST(Corpus, C3CatalogEntriesAreExact) {
  auto catalog = load_c3_catalog(kData + "/c3-catalog.records");
  ASSERT_EQ(catalog.size(), 29u);
  for (const auto& c : catalog) {
    GenMatrix m = c.matrix();
    EXPECT_EQ(int(m.cols()), c.n);
    EXPECT_EQ(int(rank(m)), c.k);
    DistanceResult d = min_distance_exact(m);
    EXPECT_TRUE(d.exact);
    EXPECT_EQ(d.weight, c.d) << "[" << c.n << "," << c.k << "," << c.d << "]_" << c.q;
  }
  // every construction in the published tables finds its third code here
  auto has = [&](int q, int n, int k, int d) {
    for (const auto& c : catalog)
      if (c.q == q && c.n == n && c.k == k && c.d == d) return true;
    return false;
  };
  EXPECT_TRUE(has(2, 2, 1, 2));
  EXPECT_TRUE(has(2, 1, 1, 1));
  EXPECT_TRUE(has(2, 3, 2, 2));
  EXPECT_TRUE(has(2, 2, 2, 1));
  EXPECT_TRUE(has(2, 7, 4, 3));
  EXPECT_TRUE(has(2, 8, 4, 4));
  EXPECT_TRUE(has(3, 1, 1, 1));
  EXPECT_TRUE(has(3, 2, 1, 2));
  EXPECT_TRUE(has(3, 3, 2, 2));
  EXPECT_TRUE(has(3, 3, 1, 3));
  EXPECT_TRUE(has(3, 4, 3, 2));
  EXPECT_TRUE(has(3, 6, 3, 3));
  EXPECT_TRUE(has(3, 7, 3, 4));
  EXPECT_TRUE(has(3, 8, 3, 5));
  EXPECT_TRUE(has(3, 9, 4, 5));
  EXPECT_TRUE(has(3, 10, 4, 6));
  EXPECT_TRUE(has(3, 11, 4, 6));
  EXPECT_TRUE(has(3, 12, 4, 6));
  EXPECT_TRUE(has(3, 8, 5, 3));
  EXPECT_TRUE(has(3, 9, 5, 4));
  EXPECT_TRUE(has(3, 10, 5, 5));
  EXPECT_TRUE(has(3, 11, 5, 6));
  EXPECT_TRUE(has(4, 3, 1, 3));
  EXPECT_TRUE(has(5, 3, 2, 2));
}
