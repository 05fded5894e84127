// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "ctw/constructors.hpp"
#include "ctw/harness.hpp"
#include "ctw/serialize.hpp"
#include "printers.hpp"

namespace {

using namespace ctw;

// Rebuilds the denotation from a dump, using only the JSON.
class DumpDecoder {
 public:
  explicit DumpDecoder(const Json& dump) : nodes_(dump.at("nodes")) {}

  Word ref(const Json& r) {
    if (r.is_null()) return {};
    const Word w = node(r.at("node").get<std::size_t>());
    return r.at("inverted").get<bool>() ? invert(w) : w;
  }

 private:
  Word node(std::size_t i) {
    const Json& n = nodes_.at(i);
    const std::string kind = n.at("kind");
    Word w;
    if (kind == "literal") {
      w = parse_word(n.at("word").get<std::string>(), Rank(8));
    } else if (kind == "concat") {
      // Cancellation is implied by free reduction; check the recorded count.
      const Word a = ref(n.at("first"));
      const Word b = ref(n.at("second"));
      w = concat(a, b);
      EXPECT_EQ(std::to_string((a.size() + b.size() - w.size()) / 2), n.at("cancelled").get<std::string>());
    } else if (kind == "slice") {
      const Word s = ref(n.at("source"));
      w = s.subword(std::stoul(n.at("offset").get<std::string>()), std::stoul(n.at("length").get<std::string>()));
    } else if (kind == "power") {
      w = power(ref(n.at("base")), n.at("exponent").get<long long>());
    } else {
      ADD_FAILURE() << "unknown kind " << kind;
    }
    EXPECT_EQ(std::to_string(w.size()), n.at("length").get<std::string>());
    return w;
  }

  const Json& nodes_;
};

TEST(DumpExpr, DecodesToTheDenotation) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 50; ++i) {
    const Expr a = lit(random_word(rng, 2, 1, 4));
    const Expr b = lit(random_word(rng, 2, 1, 4));
    Expr e = build_w2(a, b);
    if (i % 3 == 0) e = slice(e, e.length() / 3, e.length() / 2);
    if (i % 2 == 0) e = e.inverse();
    const Json dump = dump_expr(e);
    ASSERT_EQ(dump.at("length").get<std::string>(), to_string(e.length()));
    const auto nodes = dump.at("nodes");
    EXPECT_EQ(nodes.size(), dag_stats(e).nodes);
    // Children precede parents.
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      for (const char* field : {"first", "second", "source", "base"}) {
        if (nodes[k].contains(field) && !nodes[k][field].is_null()) {
          EXPECT_LT(nodes[k][field]["node"].get<std::size_t>(), k);
        }
      }
    }
    DumpDecoder d(dump);
    EXPECT_EQ(d.ref(dump.at("root")), expand(e, 10'000'000).value());
    // Text round trip.
    EXPECT_EQ(Json::parse(dump.dump()), dump);
  }
}

TEST(DumpExpr, Empty) {
  const Json d = dump_expr(Expr{});
  EXPECT_TRUE(d.at("root").is_null());
  EXPECT_TRUE(d.at("nodes").empty());
  EXPECT_EQ(d.at("length"), "0");
}

TEST(VerdictJson, Fields) {
  const OracleConfig cfg;
  const Expr x = lit(parse_word("x1 x2", Rank(2)));
  const Json eq = to_json(decide_equal(x, x, Rank(2), cfg));
  EXPECT_EQ(eq.at("verdict"), "ProbablyEqual");
  EXPECT_EQ(eq.at("method"), "exact");
  EXPECT_TRUE(eq.at("log10_error_bound").is_null());
  EXPECT_EQ(eq.at("error_bound"), 0.0);
  EXPECT_EQ(eq.at("primes").size(), 5u);

  const Json ne = to_json(equal_mc(x, x.inverse(), Rank(2), cfg));
  EXPECT_EQ(ne.at("verdict"), "DefinitelyUnequal");
  EXPECT_EQ(ne.at("method"), "monte_carlo");
  EXPECT_TRUE(ne.contains("witness_prime"));
  EXPECT_FALSE(ne.contains("error_bound"));

  const Json mc = to_json(equal_mc(x, x, Rank(2), cfg));
  EXPECT_LT(mc.at("log10_error_bound").get<double>(), -70);
}

TEST(ReportJson, RoundTrip) {
  Report r;
  r.suite = "lemma1";
  r.seed = 42;
  r.scale = "tiny";
  r.cases = 3;
  r.passes = 2;
  r.findings.push_back(Finding{1, "X = (x1; x2)", "v2 is not a proper power", "root exponent 2", 1e-90});
  r.error_bound_total = 2e-90;
  r.millis = 17;
  const Json j = to_json(r);
  const Report back = report_from_json(Json::parse(j.dump()));
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(j.at("findings")[0].at("case"), 1);
  EXPECT_FALSE(back.ok());
}

TEST(ReportJson, SuiteReportRoundTrip) {
  const Report r = run_suite("lemma9", 3, SmallConfig::tiny());
  EXPECT_EQ(to_json(report_from_json(to_json(r))), to_json(r));
}

TEST(DescriptorJson, Fields) {
  for (const auto& d : list_suites()) {
    const Json j = to_json(d);
    EXPECT_EQ(j.at("name"), d.name);
    EXPECT_FALSE(j.at("claim").get<std::string>().empty());
    EXPECT_FALSE(j.at("anchor").get<std::string>().empty());
  }
}

}  // namespace
