// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gammacrit/criticality.hpp"
#include "gammacrit/domination.hpp"
#include "gammacrit/families.hpp"
#include "gammacrit/io.hpp"
#include "gammacrit/treegen.hpp"
#include "gammacrit/verify.hpp"
#include "oracles.hpp"

using namespace gammacrit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;
AnalysisCache shared_cache;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s criterion %2d: %s -- %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

TheoremReport theorem(const std::string& id, std::optional<std::size_t> max_n = std::nullopt) {
  VerifyConfig cfg;
  cfg.max_n = max_n;
  return run_theorem(id, cfg, shared_cache);
}

std::string describe(const TheoremReport& r) {
  std::ostringstream os;
  os << r.theorem_id << ": " << r.instances_checked << " checked, " << r.counterexamples.size()
     << " counterexamples, " << r.skipped.size() << " skipped";
  if (!r.counterexamples.empty()) {
    const auto& c = r.counterexamples.front();
    os << "; first " << c.graph6 << " expected " << c.expected << " actual " << c.actual;
  }
  return os.str();
}

Outcome from_reports(const std::vector<TheoremReport>& reports) {
  Outcome o{true, ""};
  for (const auto& r : reports) {
    o.pass = o.pass && r.verdict() == Verdict::Pass;
    o.detail += (o.detail.empty() ? "" : "; ") + describe(r);
  }
  return o;
}

std::size_t exact_q(const Graph& g) {
  const auto q = criticality_index(g).q;
  return q ? *q : 0;
}

std::size_t tree_count(std::size_t lo, std::size_t hi) {
  std::size_t total = 0;
  for (std::size_t n = lo; n <= hi; ++n) total += enumerate_trees(n).size();
  return total;
}

}  // namespace

int main() {
  criterion(1, "path/cycle (sd, q) mod-3 table, 3 <= n <= 13", [] {
    Outcome o{true, ""};
    std::size_t checked = 0;
    for (std::size_t n = 3; n <= 13; ++n) {
      const std::size_t want = n % 3 == 0 ? 1 : (n % 3 == 2 ? 2 : 3);
      for (const Graph& g : {make_path(n).graph, make_cycle(n).graph}) {
        const auto r = criticality_index(g);
        ++checked;
        if (r.sd != want || r.q != want) {
          o.pass = false;
          o.detail += encode_graph6(g) + " ";
        }
      }
    }
    o.detail += std::to_string(checked) + " graphs, exact";
    return o;
  });

  criterion(2, "q(K_{2,t}) = t+1 and q(K_{s,t}) = 2", [] {
    Outcome o{true, ""};
    for (std::size_t t = 2; t <= 5; ++t) {
      const std::size_t q = exact_q(make_complete_bipartite(2, t).graph);
      o.pass = o.pass && q == t + 1;
      o.detail += "K2," + std::to_string(t) + ":" + std::to_string(q) + " ";
    }
    for (std::size_t s = 3; s <= 5; ++s) {
      for (std::size_t t = s; t <= 5; ++t) {
        const std::size_t q = exact_q(make_complete_bipartite(s, t).graph);
        o.pass = o.pass && q == 2;
        o.detail += "K" + std::to_string(s) + "," + std::to_string(t) + ":" + std::to_string(q) + " ";
      }
    }
    return o;
  });

  criterion(3, "wounded spiders q = n-d, 1 <= d <= t <= 5", [] {
    Outcome o{true, ""};
    std::size_t checked = 0;
    for (std::size_t t = 1; t <= 5; ++t) {
      for (std::size_t d = 1; d <= t; ++d) {
        const Graph g = make_wounded_spider(t, d).graph;
        if (g.order() < 3) {
          o.detail += "t=d=1 is K_2 (order 2, no edge subset raises gamma, q undefined): excluded; ";
          continue;
        }
        ++checked;
        if (exact_q(g) != g.order() - d) {
          o.pass = false;
          o.detail += "t=" + std::to_string(t) + ",d=" + std::to_string(d) + " mismatch; ";
        }
      }
    }
    o.detail += std::to_string(checked) + " spiders of order >= 3 exact";
    return o;
  });

  criterion(4, "G_k: q = n-k and gamma = k+1, k = 1..3", [] {
    Outcome o{true, ""};
    for (std::size_t k = 1; k <= 3; ++k) {
      const Graph g = make_g_k(k).graph;
      const auto r = criticality_index(g);
      o.pass = o.pass && r.q == g.order() - k && r.gamma == k + 1;
      o.detail += "k=" + std::to_string(k) + ": gamma=" + std::to_string(r.gamma) +
                  " q=" + (r.q ? std::to_string(*r.q) : "?") + " ";
    }
    return o;
  });

  criterion(5, "A_k: q = n+k, gamma = 3 (k = 0,1); V_1 unique gamma-set for k = 0", [] {
    Outcome o{true, ""};
    for (std::size_t k = 0; k <= 1; ++k) {
      const Graph g = make_a_k(k).graph;
      const auto r = criticality_index(g);
      o.pass = o.pass && r.q == g.order() + k && r.gamma == 3;
      o.detail += "k=" + std::to_string(k) + ": gamma=" + std::to_string(r.gamma) +
                  " q=" + (r.q ? std::to_string(*r.q) : "?") + "; ";
    }
    const FamilyInstance a0 = make_a_k(0);
    const auto sets = all_gamma_sets(a0.graph);
    const std::size_t brute = oracle::gamma_sets(oracle::from_graph(a0.graph)).size();
    const bool unique = sets.gamma_sets.size() == 1;
    o.pass = o.pass && unique;
    o.detail += "A_0 has " + std::to_string(sets.gamma_sets.size()) + " gamma-sets (brute force " +
                std::to_string(brute) + "), e.g. {x_1, v_2, v_3}; uniqueness of V_1 " +
                (unique ? "holds" : "does not hold");
    return o;
  });

  criterion(6, "corona q = m+1+alpha for P_2,P_3,P_4,C_3,C_4,K_{1,3},K_4", [] {
    Outcome o{true, ""};
    const std::vector<std::pair<std::string, Graph>> bases{
        {"P_2", make_path(2).graph},   {"P_3", make_path(3).graph},
        {"P_4", make_path(4).graph},   {"C_3", make_cycle(3).graph},
        {"C_4", make_cycle(4).graph},  {"K_{1,3}", make_star(3).graph},
        {"K_4", make_complete(4).graph}};
    for (const auto& [name, base] : bases) {
      const std::size_t want = base.size() + 1 + oracle::alpha(oracle::from_graph(base));
      const std::size_t got = exact_q(make_corona_k1(base, name).graph);
      o.pass = o.pass && got == want;
      o.detail += name + ":" + std::to_string(got) + "/" + std::to_string(want) + " ";
    }
    return o;
  });

  criterion(7, "tree bounds 1 <= q <= n-1 (3 <= n <= 10) and extremal iff (n <= 9)", [] {
    Outcome o = from_reports({theorem("COR-BOUNDS", 10), theorem("THM-EXTREMAL", 9)});
    const std::size_t oracle_count = tree_count(3, 10);
    o.detail += "; corpus is every free tree with 3 <= n <= 10 = " + std::to_string(oracle_count) +
                " trees (the figure 433 does not match the tree counts of criterion 13; it is the "
                "sum for 4 <= n <= 11)";
    return o;
  });

  criterion(8, "every gamma-set a 2-packing iff q = 1, trees 3 <= n <= 10", [] {
    return from_reports({theorem("THM-RAD-1CRIT", 10)});
  });

  criterion(9, "2-critical characterization, trees 3 <= n <= 10 (literal or flagged reading)", [] {
    const TheoremReport r = theorem("THM-2CRIT-CHAR", 10);
    Outcome o{r.verdict() == Verdict::Pass, describe(r)};
    if (!o.pass) {
      bool alternative_clean = false;
      for (const auto& n : r.notes) {
        if (n.starts_with("[alternative] (advisory) 0 discrepancies")) alternative_clean = true;
      }
      o.pass = alternative_clean && r.skipped.empty();
      o.detail += alternative_clean
                       ? "; literal reading flagged, alternative reading has 0 discrepancies"
                       : "; alternative reading also disagrees";
    }
    return o;
  });

  criterion(10, "sd in {1,2,3}, sd = 1 and sd = 3 characterizations, trees 3 <= n <= 10", [] {
    return from_reports(
        {theorem("THM-SD-RANGE", 10), theorem("THM-SD1", 10), theorem("THM-SD3-FAMILY", 10)});
  });

  criterion(11, "(q,sd)=(2,2) exactly {P_5,P_8,P_11}; (3,3) exactly {P_4,P_7,P_10}; n <= 11", [] {
    std::set<std::string> two;
    std::set<std::string> three;
    for (const Graph& t : enumerate_trees(3, 11)) {
      const auto r = criticality_index(t);
      if (r.q == 2U && r.sd == 2U) two.insert(canonical_code(t).bytes);
      if (r.q == 3U && r.sd == 3U) three.insert(canonical_code(t).bytes);
    }
    auto codes = [](std::initializer_list<std::size_t> ns) {
      std::set<std::string> s;
      for (std::size_t n : ns) s.insert(canonical_code(make_path(n).graph).bytes);
      return s;
    };
    const bool ok = two == codes({5, 8, 11}) && three == codes({4, 7, 10});
    Outcome o = from_reports({theorem("THM-SD2-P3K2", 11), theorem("THM-SD3-P3K1", 11)});
    o.pass = o.pass && ok;
    o.detail = "(2,2): " + std::to_string(two.size()) + " trees, (3,3): " +
               std::to_string(three.size()) + " trees, sets " + (ok ? "exact" : "differ") + "; " +
               o.detail;
    return o;
  });

  criterion(12, "criticality equals naive oracle (m <= 10); monotonicity on 10000 pairs", [] {
    std::vector<Graph> corpus;
    for (std::size_t n = 3; n <= 8; ++n) {
      for (Graph& t : enumerate_trees(n)) corpus.push_back(std::move(t));
    }
    for (std::size_t n = 3; n <= 10; ++n) corpus.push_back(make_cycle(n).graph);
    for (std::size_t t = 2; t <= 5; ++t) corpus.push_back(make_complete_bipartite(2, t).graph);
    corpus.push_back(make_complete_bipartite(3, 3).graph);
    std::size_t mismatches = 0;
    for (const Graph& g : corpus) {
      const auto fast = criticality_index(g);
      const auto naive = oracle::criticality(oracle::from_graph(g));
      if (fast.gamma != naive.gamma || fast.sd != naive.sd || fast.q != naive.q) ++mismatches;
    }

    std::mt19937_64 rng(20261014);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < 10'000; ++i) {
      const Graph& g = corpus[i % corpus.size()];
      const std::uint64_t all = (std::uint64_t{1} << g.size()) - 1;
      const std::uint64_t larger = rng() & all;
      const std::uint64_t smaller = larger & rng();
      const auto s = oracle::from_graph(g);
      const std::size_t g0 = oracle::gamma(s);
      const std::size_t gs = oracle::gamma(oracle::subdivide(s, smaller));
      const std::size_t gl = oracle::gamma(oracle::subdivide(s, larger));
      if (gs < g0 || gs > gl) ++violations;
    }
    const TheoremReport mono = theorem("PROP-MONOTONE");
    return Outcome{mismatches == 0 && violations == 0 && mono.verdict() == Verdict::Pass,
                   std::to_string(corpus.size()) + " graphs, " + std::to_string(mismatches) +
                       " oracle mismatches; 10000 brute-force nested pairs, " +
                       std::to_string(violations) + " violations; " + describe(mono)};
  });

  criterion(13, "free-tree counts n = 1..11 and graph6 round-trip", [] {
    const std::vector<std::size_t> want{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
    Outcome o{true, "counts"};
    std::size_t round_trips = 0;
    for (std::size_t n = 1; n <= want.size(); ++n) {
      const auto trees = enumerate_trees(n);
      o.pass = o.pass && trees.size() == want[n - 1];
      o.detail += " " + std::to_string(trees.size());
      for (const Graph& t : trees) {
        ++round_trips;
        o.pass = o.pass && decode_graph6(encode_graph6(t)) == t;
      }
    }
    for (std::size_t n = 3; n <= 13; ++n) {
      for (const Graph& g : {make_path(n).graph, make_cycle(n).graph}) {
        ++round_trips;
        o.pass = o.pass && decode_graph6(encode_graph6(g)) == g;
      }
    }
    o.detail += "; " + std::to_string(round_trips) + " graph6 round-trips";
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
