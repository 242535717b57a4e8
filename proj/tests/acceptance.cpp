// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "corpus.hpp"
#include "irrwalk/algebra/factor.hpp"
#include "irrwalk/cli/report.hpp"
#include "irrwalk/cli/run.hpp"
#include "oracles/curves.hpp"
#include "oracles/numeric_walk.hpp"

using namespace irrwalk;
using irrwalk::testing::k4_minus_edge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

IntPoly P(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

const char* kC5 = "0 1\n1 2\n2 3\n3 4\n4 0\n";

Json cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), "irrwalk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  if (run_cli(static_cast<int>(argv.size()), argv.data(), out, err) != 0) throw Error(err.str());
  return Json::parse(out.str());
}

std::vector<std::pair<std::string, int>> factor_signature(const IntPoly& p) {
  std::vector<std::pair<std::string, int>> s;
  for (const auto& [f, m] : factor_integer_poly(p).factors) s.emplace_back(to_string(f), m);
  std::sort(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------------------

void criterion1(Check& c) {
  struct Case {
    const char* name;
    std::string text;
    Graph g;
    Rat diag, off;
  };
  for (const auto& cs : {Case{"C5", kC5, cycle_graph(5), Rat(9, 25), Rat(4, 25)},
                         Case{"P2", "0 1", path_graph(2), Rat(1, 2), Rat(1, 2)}}) {
    const auto t0 = Clock::now();
    Json m = cli_json({"amm", "--inline", cs.text})["matrix"];
    const double dt = seconds_since(t0);
    oracle::NumericWalk nw(cs.g);
    double worst = 0;
    bool exact = m.size() == cs.g.n();
    for (std::size_t a = 0; a < cs.g.n() && exact; ++a)
      for (std::size_t b = 0; b < cs.g.n(); ++b) {
        const Rat q = rat_from_json(m[a][b]);
        exact = exact && q == (a == b ? cs.diag : cs.off);
        worst = std::max(worst, std::abs(to_double(q) - nw.time_average_sq(a, b, 1e5)));
      }
    c.require(exact, std::string(cs.name) + " exact entries");
    c.require(worst < 1e-2, std::string(cs.name) + " oracle agreement");
    c.require(dt < 5, std::string(cs.name) + " runtime");
    c.note(std::string(cs.name) + ": oracle deviation " + fmt("%.2e", worst) + ", " + fmt("%.3f", dt) + " s");
  }
}

void criterion2(Check& c) {
  struct Case {
    const char* name;
    Graph g;
    std::size_t a, b;
    PgstResult expect;
  };
  for (const auto& cs : {Case{"P2 (0,1)", path_graph(2), 0, 1, PgstResult::pgst},
                         Case{"C5 (0,1)", cycle_graph(5), 0, 1, PgstResult::not_strongly_cospectral},
                         Case{"K4-e degree-3 pair", k4_minus_edge(), 2, 3, PgstResult::pgst},
                         Case{"P3 (0,2)", path_graph(3), 0, 2, PgstResult::pgst}}) {
    const auto t0 = Clock::now();
    const PgstVerdict v = decide_pgst(cs.g, cs.a, cs.b);
    const double dt = seconds_since(t0);
    c.require(v.result == cs.expect, std::string(cs.name) + " verdict " + to_string(v.result));
    c.require(dt < 10, std::string(cs.name) + " runtime");
    c.note(std::string(cs.name) + " -> " + to_string(v.result) + " (" + fmt("%.3f", dt) + " s)");
  }
}

void criterion3(Check& c) {
  const IntPoly k4e = char_poly(k4_minus_edge());
  c.require(factor_signature(k4e) == factor_signature(P({0, 1}) * P({1, 1}) * P({-4, -1, 1})) &&
                factor_integer_poly(k4e).expand() == k4e,
            "K4-e factorization");
  const IntPoly quartic = P({4, 6, -5, -2, 1});
  const IntPoly fig = P({-1, 1}) * P({-1, 1}) * quartic;
  std::vector<std::pair<std::string, int>> expect = {{to_string(P({-1, 1})), 2}, {to_string(quartic), 1}};
  std::sort(expect.begin(), expect.end());
  c.require(factor_signature(fig) == expect, "(t-1)^2 times quartic");
  c.require(is_irreducible(quartic), "quartic irreducible");
  const auto roots = splitting_field(quartic).roots();
  const FrequencyBasis fb = frequency_basis(roots);
  bool paired = fb.relations.size() == 1 && fb.k() == 3;
  if (paired) {
    // Generator of the form e_i + e_j - e_k - e_l, with both pairs summing to 1.
    const auto& g = fb.relations[0];
    std::vector<std::size_t> plus, minus;
    for (std::size_t r = 0; r < 4; ++r) (g[r] == 1 ? plus : g[r] == -1 ? minus : plus).push_back(r);
    for (std::size_t r = 0; r < 4; ++r) paired = paired && (g[r] == 1 || g[r] == -1);
    paired = paired && plus.size() == 2 && minus.size() == 2;
    if (paired) {
      const AlgebraicNumber one = AlgebraicNumber::rational(roots[0].field(), 1);
      paired = roots[plus[0]] + roots[plus[1]] == one && roots[minus[0]] + roots[minus[1]] == one;
    }
  }
  c.require(paired, "quartic relation lattice of rank 1 pairing roots with sum 1");
  c.note("k = " + std::to_string(fb.k()) + ", relations = " + std::to_string(fb.relations.size()));
  // The caption's polynomial has trace 4, so it cannot be an adjacency characteristic polynomial;
  // a 6-vertex graph with (t+1)^2 in its place exists.
  const Graph g = parse_graph("EtN?", GraphFormat::graph6);
  c.note(std::string("graph EtN? has (t+1)^2 quartic: ") +
         (char_poly(g) == P({1, 1}) * P({1, 1}) * quartic ? "yes" : "no"));
}

void criterion4(Check& c) {
  auto reconstructs = [](const FrequencyBasis& fb) {
    for (std::size_t r = 0; r < fb.thetas.size(); ++r) {
      AlgebraicNumber acc = AlgebraicNumber::rational(fb.thetas[r].field(), 0);
      for (std::size_t l = 0; l < fb.k(); ++l) acc += fb.w[l] * Rat(fb.f(r, l));
      if (!(acc == fb.thetas[r])) return false;
    }
    return true;
  };
  for (auto [n, expect] : {std::pair{5, 5}, {7, 7}, {9, 3}}) {
    auto sd = spectral_decomposition(cycle_graph(n));
    auto fb = frequency_basis(sd, 0, 0);
    auto ro = rotation_symmetry_order(fb);
    c.require(!ro.unbounded() && *ro.value == expect, "C" + std::to_string(n) + " order " + ro.to_string());
    c.require(reconstructs(fb) && reconstructs(frequency_basis(sd)), "C" + std::to_string(n) + " reconstruction");
    c.note("C" + std::to_string(n) + ": " + ro.to_string());
  }
  auto sd = spectral_decomposition(k4_minus_edge());
  auto pg = frequency_basis(sd, 2, 3), ind = frequency_basis(sd, 0, 2);
  auto o1 = rotation_symmetry_order(pg), o2 = rotation_symmetry_order(ind);
  c.require(o1.to_string() == "3", "K4-e PGST pair order " + o1.to_string());
  c.require(o2.unbounded(), "K4-e independent pair order " + o2.to_string());
  c.require(reconstructs(pg) && reconstructs(ind), "K4-e reconstruction");
  c.note("K4-e: PGST pair " + o1.to_string() + ", mixed pair " + o2.to_string());
}

void criterion5(Check& c) {
  const auto t0 = Clock::now();
  auto sd = spectral_decomposition(cycle_graph(5));
  const auto& th = sd.eigenvalues;
  if (!(th[0] == (th[1] + th[2]) * Rat(-2))) {
    c.require(false, "C5 eigenvalue relation");
    return;
  }
  // Coordinates (z1, z2) are the phases of theta_1 t and theta_2 t.
  TorusMap tm({sd.entry(0, 0, 0), sd.entry(1, 0, 0), sd.entry(2, 0, 0)},
              IntMatrix::from_rows({{Int(-2), Int(-2)}, {Int(1), Int(0)}, {Int(0), Int(1)}}));
  const std::size_t R = 512;
  Caustics cs = trace_caustics(tm, R);
  const int lines[3][2] = {{1, -1}, {2, 3}, {3, 2}};  // the third is the mirror image of the second
  const int hypo_k[3] = {1, 2, 2};
  double worst_line = 0, worst_hypo = 0;
  std::size_t points = 0, per_line[3] = {0, 0, 0};
  for (std::size_t k = 0; k < cs.torus_curves.size(); ++k)
    for (std::size_t p = 0; p < cs.torus_curves[k].size(); ++p, ++points) {
      const auto& z = cs.torus_curves[k][p];
      int best = 0;
      double d = 1e9;
      for (int l = 0; l < 3; ++l) {
        const double dl = oracle::distance_to_torus_line(lines[l][0], lines[l][1], z[0], z[1]);
        if (dl < d) d = dl, best = l;
      }
      ++per_line[best];
      worst_line = std::max(worst_line, d);
      worst_hypo = std::max(worst_hypo, oracle::distance_to_hypocycloid(5, hypo_k[best], cs.images[k].points[p]));
    }
  // Coverage: every sample of the two independent lines has a traced point within two grid cells.
  const double h = 2 * std::numbers::pi / R;
  double cover = 0;
  for (int l = 0; l < 2; ++l)
    for (int s = 0; s < 400; ++s) {
      const double t = 2 * std::numbers::pi * s / 400.0;
      const double z1 = l == 0 ? t : 3 * t, z2 = l == 0 ? t : -2 * t;
      double d = 1e9;
      for (const auto& curve : cs.torus_curves)
        for (const auto& z : curve)
          d = std::min(d, std::hypot(std::remainder(z[0] - z1, 2 * std::numbers::pi),
                                     std::remainder(z[1] - z2, 2 * std::numbers::pi)));
      cover = std::max(cover, d);
    }
  const double dt = seconds_since(t0);
  c.require(points > 0 && per_line[0] > 0 && per_line[1] > 0, "both lines traced");
  c.require(worst_line <= 1e-6, "torus points within 1e-6 of the critical lines");
  c.require(worst_hypo <= 1e-6, "image points within 1e-6 of the hypocycloids");
  c.require(cover < 2 * h, "critical lines covered within two grid cells");
  c.require(dt < 30, "runtime at resolution 512");
  c.note(std::to_string(points) + " points; line dev " + fmt("%.2e", worst_line) + ", hypocycloid dev " +
         fmt("%.2e", worst_hypo) + ", coverage " + fmt("%.2e", cover) + ", " +
         fmt("%.2f", dt) + " s");
}

void criterion6(Check& c) {
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{
           {"P2", path_graph(2)}, {"P3", path_graph(3)}, {"C5", cycle_graph(5)}, {"K4-e", k4_minus_edge()}}) {
    auto sd = spectral_decomposition(g);
    auto m = average_mixing_matrix(sd);
    bool eq = true;
    for (std::size_t a = 0; a < g.n(); ++a)
      for (std::size_t b = 0; b < g.n(); ++b) eq = eq && even_moment(sd, a, b, 1) == m.entries[a][b];
    c.require(eq, name + " first moment equals the AMM");
  }
  auto p2 = spectral_decomposition(path_graph(2));
  bool closed = true;
  for (unsigned ell = 1; ell <= 8; ++ell)
    closed = closed && even_moment(p2, 0, 1, ell) == Rat(binomial(2 * ell, ell)) / Rat(pow(Int(4), ell));
  c.require(closed, "P2 central-binomial moments through ell = 8");
  auto br = supremum_estimate(p2, 0, 1, 16);
  bool mono = true;
  for (std::size_t i = 1; i < br.size(); ++i) mono = mono && br[i - 1].lo <= br[i].lo && br[i].hi <= 1;
  c.require(mono, "P2 bounds nondecreasing and at most 1");
  c.require(br.back().lo > Rat(93, 100), "P2 bound exceeds 0.93 by ell = 16");
  auto c5 = supremum_estimate(spectral_decomposition(cycle_graph(5)), 0, 1, 8);
  for (std::size_t i = 1; i < c5.size(); ++i) mono = mono && c5[i - 1].lo <= c5[i].lo;
  c.require(mono, "C5 bounds nondecreasing");
  c.note("P2 ell=16 lower bound " + fmt("%.6f", to_double(br.back().lo)) + "; C5 (0,1) ell=8 bound " +
         fmt("%.6f", to_double(c5.back().lo)));
}

void criterion7(Check& c) {
  const auto t0 = Clock::now();
  std::size_t graphs = 0, images = 0;
  bool identities = true, conj = true, stochastic = true;
  for (const auto& cg : irrwalk::testing::load_corpus()) {
    const Graph& G = cg.graph;
    if (!G.connected() || G.n() > 8) continue;
    ++graphs;
    auto sd = spectral_decomposition(G);
    const FieldPtr& K = sd.field();
    for (std::size_t a = 0; a < G.n(); ++a)
      for (std::size_t b = 0; b < G.n(); ++b) {
        AlgebraicNumber id = AlgebraicNumber::rational(K, 0), eig = id;
        for (std::size_t r = 0; r < sd.size(); ++r) {
          id += sd.entry(r, a, b);
          eig += sd.eigenvalues[r] * sd.entry(r, a, b);
        }
        identities = identities && id == AlgebraicNumber::rational(K, a == b ? 1 : 0) &&
                     eig == AlgebraicNumber::rational(K, G.adjacent(a, b) ? 1 : 0);
      }
    auto m = average_mixing_matrix(sd);
    for (std::size_t a = 0; a < G.n(); ++a) {
      Rat row = 0, col = 0;
      for (std::size_t b = 0; b < G.n(); ++b) {
        row += m.entries[a][b];
        col += m.entries[b][a];
        stochastic = stochastic && m.entries[a][b] >= 0;
      }
      stochastic = stochastic && row == 1 && col == 1;
    }
    for (std::size_t b = 0; b < G.n(); ++b) {
      TorusMap tm = TorusMap::for_entry(sd, 0, b);
      const std::size_t k = tm.k();
      const std::size_t grid = k <= 2 ? 8 : k <= 4 ? 4 : 2;
      std::size_t total = 1;
      for (std::size_t l = 0; l < k; ++l) total *= grid;
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<long> i(k), mi(k);
        std::size_t rem = idx;
        for (std::size_t l = k; l-- > 0;) {
          i[l] = static_cast<long>(rem % grid);
          mi[l] = (static_cast<long>(grid) - i[l]) % static_cast<long>(grid);
          rem /= grid;
        }
        conj = conj && torus_value_exact(tm, grid, mi) == torus_value_exact(tm, grid, i).conjugate();
      }
      ++images;
    }
  }
  const double dt = seconds_since(t0);
  c.require(graphs >= 50, "corpus has at least 50 connected graphs on <= 8 vertices");
  c.require(identities, "resolution of identity and eigen-equation");
  c.require(conj, "exact conjugation symmetry of torus images");
  c.require(stochastic, "AMM doubly stochastic");
  c.require(dt < 900, "runtime");
  c.note(std::to_string(graphs) + " graphs, " + std::to_string(images) + " torus images, " + fmt("%.1f", dt) + " s");
}

void criterion8(Check& c) {
  struct Case {
    const char* name;
    Graph g;
    std::size_t a, b;
  };
  for (const auto& cs : {Case{"P2 (0,1)", path_graph(2), 0, 1}, Case{"P3 (0,2)", path_graph(3), 0, 2},
                         Case{"K4-e (2,3)", k4_minus_edge(), 2, 3}}) {
    const double mx = oracle::NumericWalk(cs.g).sweep_max(cs.a, cs.b, 0, 1e4, 1e-2);
    c.require(mx > 0.9, std::string(cs.name) + " sweep maximum");
    c.note(std::string(cs.name) + " max " + fmt("%.6f", mx));
  }
  const double mx = oracle::NumericWalk(cycle_graph(5)).sweep_max(0, 1, 0, 1e4, 1e-2);
  const double delta = 1 - mx;
  c.require(delta > 0, "C5 (0,1) stays below 1");
  c.note("C5 (0,1) max " + fmt("%.6f", mx) + ", delta = " + fmt("%.6f", delta));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"exact average mixing matrix", criterion1}, {"PGST decisions", criterion2},
      {"factorization fixtures", criterion3},      {"frequency basis and symmetry", criterion4},
      {"caustics", criterion5},                    {"moments", criterion6},
      {"property suites", criterion7},             {"numerical corroboration", criterion8},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    all = all && c.ok;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (c.ok ? "PASS" : "FAIL");
    for (std::size_t n = 0; n < c.notes.size(); ++n) std::cout << (n ? "; " : " -- ") << c.notes[n];
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
