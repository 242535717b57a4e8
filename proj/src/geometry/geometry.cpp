#include "irrwalk/geometry/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include "irrwalk/errors.hpp"

namespace irrwalk {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double midpoint(const DyadicInterval& iv) { return to_double(Rat((iv.lo + iv.hi) / 2)); }

double certified_double(const AlgebraicNumber& x) { return midpoint(x.enclosure(64)); }

std::string fmt(double x, int digits = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double wrap(double x) {
  double r = std::fmod(x, kTwoPi);
  return r < 0 ? r + kTwoPi : r;
}

}  // namespace

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int s = 0; s < 8; ++s) mix((g.n() >> (8 * s)) & 0xff);
  for (std::size_t a = 0; a < g.n(); ++a)
    for (std::size_t b = a + 1; b < g.n(); ++b) mix(g.adjacent(a, b) ? 1 : 0);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TorusMap::TorusMap(std::vector<AlgebraicNumber> exact, IntMatrix f) : exact_(std::move(exact)), f_(std::move(f)) {
  if (f_.rows() != exact_.size()) throw InvalidArgument("TorusMap: one frequency row per coefficient expected");
  for (const auto& c : exact_) c_.push_back(certified_double(c));
  for (std::size_t r = 0; r < f_.rows(); ++r) {
    std::vector<long> row;
    for (std::size_t l = 0; l < f_.cols(); ++l) {
      if (!f_(r, l).fits_slong_p()) throw ResourceLimit("TorusMap: frequency entry too large");
      row.push_back(f_(r, l).get_si());
    }
    f_rows_.push_back(std::move(row));
  }
}

TorusMap TorusMap::for_entry(const SpectralDecomposition& sd, std::size_t a, std::size_t b) {
  return for_entry(sd, frequency_basis(sd, a, b), a, b);
}

TorusMap TorusMap::for_entry(const SpectralDecomposition& sd, const FrequencyBasis& fb, std::size_t a, std::size_t b) {
  std::vector<AlgebraicNumber> c;
  for (std::size_t r : fb.support) c.push_back(sd.entry(r, a, b));
  return TorusMap(std::move(c), fb.f);
}

std::complex<double> TorusMap::operator()(const std::vector<double>& z) const {
  std::complex<double> acc = 0;
  for (std::size_t r = 0; r < c_.size(); ++r) {
    double phase = 0;
    for (std::size_t l = 0; l < k(); ++l) phase += f_rows_[r][l] * z[l];
    acc += c_[r] * std::polar(1.0, phase);
  }
  return acc;
}

std::vector<std::complex<double>> TorusMap::gradient(const std::vector<double>& z) const {
  std::vector<std::complex<double>> g(k(), 0.0);
  for (std::size_t r = 0; r < c_.size(); ++r) {
    double phase = 0;
    for (std::size_t l = 0; l < k(); ++l) phase += f_rows_[r][l] * z[l];
    const std::complex<double> e = std::complex<double>(0, c_[r]) * std::polar(1.0, phase);
    for (std::size_t l = 0; l < k(); ++l) g[l] += static_cast<double>(f_rows_[r][l]) * e;
  }
  return g;
}

double TorusMap::jacobian_det(double z1, double z2) const {
  auto g = gradient({z1, z2});
  return std::imag(std::conj(g[0]) * g[1]);
}

PointCloud sample_curve(const SpectralDecomposition& sd, std::size_t a, std::size_t b, double t_max, double dt) {
  if (!(t_max > 0) || !(dt > 0)) throw InvalidArgument("sample_curve: t_max and dt must be positive");
  if (a >= sd.graph.n() || b >= sd.graph.n()) throw InvalidArgument("sample_curve: vertex out of range");
  std::vector<double> theta, c;
  for (std::size_t r = 0; r < sd.size(); ++r) {
    if (sd.entry(r, a, b).is_zero()) continue;
    theta.push_back(certified_double(sd.eigenvalues[r]));
    c.push_back(certified_double(sd.entry(r, a, b)));
  }
  PointCloud pc;
  pc.source = "curve";
  pc.params = {{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"t_max", fmt(t_max)}, {"dt", fmt(dt)}};
  pc.graph_hash = graph_hash(sd.graph);
  const long steps = static_cast<long>(std::floor(t_max / dt + 1e-9));
  pc.points.reserve(steps + 1);
  for (long s = 0; s <= steps; ++s) {
    const long double t = static_cast<long double>(s) * dt;
    std::complex<double> z = 0;
    for (std::size_t r = 0; r < c.size(); ++r) {
      const double phase = static_cast<double>(std::fmod(static_cast<long double>(theta[r]) * t, 2 * std::numbers::pi_v<long double>));
      z += c[r] * std::polar(1.0, phase);
    }
    pc.points.push_back(z);
  }
  return pc;
}

PointCloud torus_image(const TorusMap& tm, std::size_t grid, const GeometryOptions& options) {
  if (grid < 2) throw InvalidArgument("torus_image: grid must be at least 2");
  const std::size_t k = tm.k();
  std::uint64_t total = 1;
  for (std::size_t l = 0; l < k; ++l) {
    if (total > options.max_points / grid)
      throw ResourceLimit("torus_image: grid^k exceeds " + std::to_string(options.max_points) + " points");
    total *= grid;
  }
  PointCloud pc;
  pc.source = "torus";
  pc.params = {{"grid", std::to_string(grid)}, {"k", std::to_string(k)}};
  pc.points.assign(total, 0.0);
  // Rows are contiguous blocks over the first coordinate; each thread fills its own block.
  const std::size_t rows = k == 0 ? 1 : grid, per_row = total / rows;
  auto fill = [&](std::size_t row_begin, std::size_t row_end) {
    std::vector<double> z(k);
    for (std::size_t idx = row_begin * per_row; idx < row_end * per_row; ++idx) {
      std::size_t rem = idx;
      for (std::size_t l = k; l-- > 0;) {
        z[l] = kTwoPi * static_cast<double>(rem % grid) / static_cast<double>(grid);
        rem /= grid;
      }
      pc.points[idx] = tm(z);
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), rows);
  if (threads <= 1 || total < 4096) {
    fill(0, rows);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(fill, rows * t / threads, rows * (t + 1) / threads);
    for (auto& th : pool) th.join();
  }
  return pc;
}

CyclotomicValue CyclotomicValue::conjugate() const {
  CyclotomicValue c;
  c.grid = grid;
  for (const auto& [e, v] : terms) c.terms.emplace((grid - e) % grid, v);
  return c;
}

bool operator==(const CyclotomicValue& x, const CyclotomicValue& y) {
  if (x.grid != y.grid || x.terms.size() != y.terms.size()) return false;
  for (auto i = x.terms.begin(), j = y.terms.begin(); i != x.terms.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

CyclotomicValue torus_value_exact(const TorusMap& tm, std::size_t grid, const std::vector<long>& index) {
  if (index.size() != tm.k()) throw InvalidArgument("torus_value_exact: index has wrong dimension");
  CyclotomicValue v;
  v.grid = static_cast<long>(grid);
  for (std::size_t r = 0; r < tm.terms(); ++r) {
    Int e = 0;
    for (std::size_t l = 0; l < tm.k(); ++l) e += tm.f()(r, l) * index[l];
    Int m;
    mpz_fdiv_r_ui(m.get_mpz_t(), e.get_mpz_t(), grid);
    auto [it, inserted] = v.terms.try_emplace(m.get_si(), tm.exact()[r]);
    if (!inserted) it->second += tm.exact()[r];
  }
  std::erase_if(v.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return v;
}

Caustics trace_caustics(const TorusMap& tm, std::size_t resolution) {
  if (tm.k() != 2) throw InvalidArgument("trace_caustics: needs a 2-torus, got k = " + std::to_string(tm.k()));
  if (resolution < 4) throw InvalidArgument("trace_caustics: resolution must be at least 4");
  const std::size_t R = resolution;
  const double h = kTwoPi / static_cast<double>(R);
  // Offsets keep grid nodes off lines with small integer slopes through the origin.
  const double o1 = 0.3183, o2 = 0.1727;
  auto node = [&](std::size_t i, std::size_t j) {
    return std::array<double, 2>{(static_cast<double>(i) + o1) * h, (static_cast<double>(j) + o2) * h};
  };
  std::vector<double> D(R * R);
  for (std::size_t j = 0; j < R; ++j)
    for (std::size_t i = 0; i < R; ++i) {
      auto z = node(i, j);
      D[j * R + i] = tm.jacobian_det(z[0], z[1]);
    }
  auto pos = [&](std::size_t i, std::size_t j) { return D[(j % R) * R + (i % R)] >= 0; };

  // Edge e = 2 (j R + i) + dir: dir 0 runs (i, j) -> (i+1, j), dir 1 runs (i, j) -> (i, j+1).
  const std::size_t E = 2 * R * R;
  std::vector<bool> crossed(E, false);
  std::vector<std::array<double, 2>> where(E);
  for (std::size_t j = 0; j < R; ++j)
    for (std::size_t i = 0; i < R; ++i)
      for (int dir = 0; dir < 2; ++dir) {
        const std::size_t i2 = dir == 0 ? i + 1 : i, j2 = dir == 0 ? j : j + 1;
        if (pos(i, j) == pos(i2, j2)) continue;
        const std::size_t e = 2 * (j * R + i) + dir;
        crossed[e] = true;
        auto z0 = node(i, j);
        double lo = 0, hi = h;
        const bool s0 = pos(i, j);
        while (hi - lo > 1e-10) {
          const double mid = (lo + hi) / 2;
          const double d = dir == 0 ? tm.jacobian_det(z0[0] + mid, z0[1]) : tm.jacobian_det(z0[0], z0[1] + mid);
          ((d >= 0) == s0 ? lo : hi) = mid;
        }
        const double t = (lo + hi) / 2;
        where[e] = dir == 0 ? std::array<double, 2>{wrap(z0[0] + t), wrap(z0[1])}
                            : std::array<double, 2>{wrap(z0[0]), wrap(z0[1] + t)};
      }

  std::vector<std::vector<std::size_t>> nbr(E);
  auto link = [&](std::size_t x, std::size_t y) {
    nbr[x].push_back(y);
    nbr[y].push_back(x);
  };
  for (std::size_t j = 0; j < R; ++j)
    for (std::size_t i = 0; i < R; ++i) {
      const std::size_t ip = (i + 1) % R, jp = (j + 1) % R;
      const std::size_t bottom = 2 * (j * R + i), top = 2 * (jp * R + i);
      const std::size_t left = 2 * (j * R + i) + 1, right = 2 * (j * R + ip) + 1;
      std::vector<std::size_t> c;
      for (std::size_t e : {bottom, right, top, left})
        if (crossed[e]) c.push_back(e);
      if (c.size() == 2) {
        link(c[0], c[1]);
      } else if (c.size() == 4) {
        auto z = node(i, j);
        const bool centre = tm.jacobian_det(z[0] + h / 2, z[1] + h / 2) >= 0;
        if (centre == pos(i, j)) {
          link(bottom, right);
          link(top, left);
        } else {
          link(bottom, left);
          link(top, right);
        }
      }
    }

  Caustics out;
  std::vector<bool> used(E, false);
  auto walk_from = [&](std::size_t start) {
    std::vector<std::array<double, 2>> curve;
    std::size_t prev = E, cur = start;
    while (true) {
      used[cur] = true;
      curve.push_back(where[cur]);
      std::size_t next = E;
      for (std::size_t n : nbr[cur])
        if (n != prev && !used[n]) {
          next = n;
          break;
        }
      if (next == E) {
        // Close the loop if we came back around to the start.
        for (std::size_t n : nbr[cur])
          if (n == start && curve.size() > 2) curve.push_back(where[start]);
        break;
      }
      prev = cur;
      cur = next;
    }
    out.torus_curves.push_back(std::move(curve));
  };
  for (std::size_t e = 0; e < E; ++e)
    if (crossed[e] && !used[e] && nbr[e].size() == 1) walk_from(e);
  for (std::size_t e = 0; e < E; ++e)
    if (crossed[e] && !used[e]) walk_from(e);

  for (std::size_t c = 0; c < out.torus_curves.size(); ++c) {
    PointCloud pc;
    pc.source = "caustics";
    pc.params = {{"curve", std::to_string(c)}, {"resolution", std::to_string(R)}};
    for (const auto& z : out.torus_curves[c]) pc.points.push_back(tm({z[0], z[1]}));
    out.images.push_back(std::move(pc));
  }
  return out;
}

std::complex<double> hypocycloid_point(int p, int kk, double t) {
  using namespace std::complex_literals;
  return (static_cast<double>(kk) * std::exp(-1i * (static_cast<double>(p - kk) * t)) +
          static_cast<double>(p - kk) * std::exp(1i * (static_cast<double>(kk) * t))) /
         static_cast<double>(p);
}

PointCloud hypocycloid(int p, int kk, std::size_t samples) {
  bool prime = p >= 3;
  for (int d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
  if (!prime || p % 2 == 0) throw InvalidArgument("hypocycloid: p must be an odd prime");
  if (kk < 1 || kk > (p - 1) / 2) throw InvalidArgument("hypocycloid: kk must lie in 1..(p-1)/2");
  if (samples < 2) throw InvalidArgument("hypocycloid: need at least 2 samples");
  PointCloud pc;
  pc.source = "hypocycloid";
  pc.params = {{"p", std::to_string(p)}, {"kk", std::to_string(kk)}, {"samples", std::to_string(samples)}};
  for (std::size_t j = 0; j < samples; ++j)
    pc.points.push_back(hypocycloid_point(p, kk, kTwoPi * static_cast<double>(j) / static_cast<double>(samples)));
  return pc;
}

void write_csv(std::ostream& out, const PointCloud& cloud) {
  out << "re,im\n";
  for (const auto& z : cloud.points) out << fmt(z.real()) << ',' << fmt(z.imag()) << '\n';
}

void write_svg(std::ostream& out, const std::vector<PointCloud>& clouds, const std::vector<PointCloud>& polylines) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\" width=\"800\" height=\"800\">\n";
  out << "<rect x=\"-1.1\" y=\"-1.1\" width=\"2.2\" height=\"2.2\" fill=\"white\"/>\n";
  out << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.003\"/>\n";
  for (const auto& c : clouds) {
    out << "<g fill=\"black\" stroke=\"none\">\n";
    for (const auto& z : c.points)
      out << "<circle cx=\"" << fmt(z.real(), 6) << "\" cy=\"" << fmt(-z.imag(), 6) << "\" r=\"0.003\"/>\n";
    out << "</g>\n";
  }
  for (const auto& c : polylines) {
    out << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.004\" points=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i)
      out << (i ? " " : "") << fmt(c.points[i].real(), 6) << ',' << fmt(-c.points[i].imag(), 6);
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace irrwalk
