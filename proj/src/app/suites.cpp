#include <chrono>
#include <ctime>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "common.hpp"
#include "crvar/oracle3.hpp"
#include "crvar/spectral.hpp"
#include "crvar/variation.hpp"

namespace crvar::app {

namespace detail {

std::string text(const FrameVector& v) {
  std::string out;
  for (int a = 0; a <= v.dimension(); ++a) {
    auto add = [&](const char* var, const SpherePoly& c) {
      if (c.is_zero()) return;
      if (!out.empty()) out += "; ";
      out += std::string("d/d") + var + std::to_string(a + 1) + ": " + c.to_string();
    };
    add("z", v.holo(a));
    add("w", v.anti(a));
  }
  return out.empty() ? "0" : out;
}

void Recorder::record(const std::string& check, const std::string& input, const std::string& relation,
                      const std::string& expected, const std::string& actual, bool pass) {
  records_.push_back({{"check", check},
                      {"input", input},
                      {"relation", relation},
                      {"expected", expected},
                      {"actual", actual},
                      {"exact", true},
                      {"pass", pass}});
  if (!pass) ++failed_;
}

void Recorder::append(Recorder&& other) {
  for (auto& r : other.records_) records_.push_back(std::move(r));
  for (auto& n : other.notes_) notes_.push_back(std::move(n));
  failed_ += other.failed_;
}

Json Recorder::finish(const std::string& name) const {
  return {{"name", name},
          {"pass", failed_ == 0},
          {"cases", size()},
          {"failed", failed_},
          {"notes", notes_},
          {"records", records_}};
}

SpherePoly frame_sublaplacian(const SpherePoly& f) {
  const int n = f.dimension();
  SpherePoly s(n);
  for (const auto& [j, k] : geller_pairs(n)) {
    FrameVector z = FrameVector::geller(n, j, k), zb = FrameVector::geller_bar(n, j, k);
    s += field_apply(z, field_apply(zb, f)) + field_apply(zb, field_apply(z, f));
  }
  return s * ExactScalar(Rational(1, 2));
}

SpherePoly real_part(const SpherePoly& f) { return (f + conjugate(f)) * ExactScalar(Rational(1, 2)); }
SpherePoly imag_part(const SpherePoly& f) {
  return (f - conjugate(f)) * ExactScalar(Rational(0), Rational(-1, 2));
}

std::string pair_label(const GellerPair& p) {
  return std::to_string(p.first + 1) + std::to_string(p.second + 1);
}

}  // namespace detail

using namespace detail;

namespace {

struct PoolItem {
  std::string input;
  Monomial monomial;
  SpherePoly value;
};

std::vector<PoolItem> pool(int n, int degree) {
  std::vector<PoolItem> out;
  for (const auto& m : enumerate_monomials(n, degree)) {
    Poly p = Poly::monomial(n, m);
    out.push_back({p.to_string(), m, normal_form(p)});
  }
  return out;
}

bool only_linear(const HarmonicDecomposition& h) {
  for (const auto& [bd, c] : h.components)
    if (bd != Bidegree{0, 0} && bd != Bidegree{1, 0} && bd != Bidegree{0, 1}) return false;
  return true;
}

// ---- ring -------------------------------------------------------------------

Recorder ring_suite(int n, int degree) {
  Recorder rec;
  for (const auto& item : pool(n, degree)) {
    const SpherePoly& f = item.value;
    Poly ambient = Poly::monomial(n, item.monomial);
    rec.equal("normal form is idempotent", item.input, f, normal_form(f.poly()));
    rec.equal("integral is invariant under reduction", item.input, integrate_sphere(ambient), integrate_sphere(f));
    rec.equal("integral commutes with conjugation", item.input, integrate_sphere(f).conj(),
              integrate_sphere(conjugate(f)));
    SpherePoly sum(n);
    for (const auto& [m, c] : fourier_components(f)) sum += c;
    rec.equal("Fourier components reconstruct", item.input, f, sum);
    rec.equal("grammar round trip", item.input, f, normal_form(parse_poly(n, f.to_string())));
  }
  return rec;
}

// ---- spectral ---------------------------------------------------------------

Recorder spectral_suite(int n, int degree) {
  Recorder rec;
  for (int p = 0; p <= degree; ++p) {
    for (int q = 0; p + q <= degree; ++q) {
      Poly h = Poly::monomial(n, [&] {
        Monomial m{};
        m.z(0) = static_cast<std::uint8_t>(p);
        m.zbar(1) = static_cast<std::uint8_t>(q);
        return m;
      }());
      SpherePoly f = normal_form(h);
      std::string input = h.to_string() + " in H(" + std::to_string(p) + "," + std::to_string(q) + ")";
      SpherePoly expected = f * ExactScalar(-eigenvalue(p, q, n));
      rec.equal("eigenvalue through the spectral operator", input, expected, sublaplacian(f));
      rec.equal("eigenvalue through the frame operator", input, expected, frame_sublaplacian(f));
    }
  }
  for (const auto& item : pool(n, degree)) {
    const SpherePoly& f = item.value;
    HarmonicDecomposition h = harmonic_decompose(f);
    SpherePoly sum(n);
    std::string laplace = "0";
    for (const auto& [bd, c] : h.components) sum += c;
    for (const auto& [bd, a] : h.ambient)
      if (Poly l = ambient_laplacian(a); !l.is_zero() && laplace == "0") laplace = l.to_string();
    rec.equal("harmonic components reconstruct", item.input, f, sum);
    rec.record("components are ambient harmonic", item.input, "==", "0", laplace, laplace == "0");
    rec.equal("frame operator agrees", item.input, sublaplacian(f), frame_sublaplacian(f));
    for (const SpherePoly& v : {real_part(f), imag_part(f)}) {
      if (v.is_zero()) continue;
      Rational mean = integrate_sphere(v).re();
      Rational gap = dirichlet_energy(v) - n * (l2_norm_squared(v) - mean * mean);
      std::string in = v.to_string();
      rec.record("energy gap is non-negative", in, ">=", "0", text(gap), gap >= 0);
      bool linear = only_linear(harmonic_decompose(v));
      rec.record("energy gap vanishes exactly on linear functions", in, "==", text(linear), text(gap == 0),
                 linear == (gap == 0));
    }
  }
  return rec;
}

// ---- frames -----------------------------------------------------------------

FrameVector projected_bar(int n, int s) {
  std::vector<SpherePoly> holo(n + 1, SpherePoly(n)), anti(n + 1, SpherePoly(n));
  anti[s] = SpherePoly(n, 1);
  for (int b = 0; b <= n; ++b) anti[b] -= SpherePoly::z(n, s) * SpherePoly::zbar(n, b);
  return FrameVector(n, holo, anti);
}

Recorder frames_suite(int n, int degree) {
  Recorder rec;
  const ExactScalar minus_i(Rational(0), Rational(-1));
  const FrameVector t = FrameVector::reeb(n);
  const FrameForm dtheta = FrameForm::contact(n).exterior_derivative();
  const auto pairs = geller_pairs(n);
  auto kd = [n](int a, int b, const SpherePoly& v) { return a == b ? v : SpherePoly(n); };
  for (const auto& jk : pairs) {
    const auto [j, k] = jk;
    const std::string zjk = "Z" + pair_label(jk);
    FrameVector z = FrameVector::geller(n, j, k);
    rec.equal("[T, Z] = -i Z", zjk, z * minus_i, bracket(t, z));
    for (const auto& pq : pairs)
      rec.equal("nabla_Z Z = 0", zjk + ", Z" + pair_label(pq), FrameVector(n),
                covariant_Z(z, FrameVector::geller(n, pq.first, pq.second)));
    for (const auto& lm : pairs) {
      const auto [l, m] = lm;
      const std::string in = "Z" + pair_label(lm) + ", " + zjk;
      FrameVector zlm = FrameVector::geller(n, l, m);
      SpherePoly form = FrameForm::geller(n, j, k)(zlm);
      rec.equal("-(i/2) d theta(Z, Zbar) = theta(Z)", in, form,
                dtheta(zlm, FrameVector::geller_bar(n, j, k)) * ExactScalar(Rational(0), Rational(-1, 2)));
      rec.equal("Levi pairing = theta(Z)", in, form, levi_pairing(zlm, z));
      SpherePoly zj = SpherePoly::zbar(n, j), zk = SpherePoly::zbar(n, k);
      FrameVector expected = (kd(k, l, zj) - kd(j, l, zk)) * projected_bar(n, m) -
                             (kd(k, m, zj) - kd(j, m, zk)) * projected_bar(n, l);
      rec.equal("nabla_Z Zbar closed form", zjk + ", Zb" + pair_label(lm), expected,
                covariant_Z(z, FrameVector::geller_bar(n, l, m)));
    }
    rec.equal("sharp map", zjk, true,
              sharp_inverse(FrameVector::geller_bar(n, j, k)).frame_components() ==
                  FrameForm::geller(n, j, k).frame_components());
  }
  auto coeffs = pool(n, std::min(degree, 2));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    FrameVector v(n);
    std::string in;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& c = coeffs[(i + 3 * p) % coeffs.size()];
      v += c.value * FrameVector::geller(n, pairs[p].first, pairs[p].second);
      in += (in.empty() ? "" : " + ") + std::string("[") + c.input + "] Z" + pair_label(pairs[p]);
    }
    SpherePoly s(n);
    FrameVector rebuilt(n);
    for (const auto& [p, c] : tight_expand(v)) {
      s += c * conjugate(c);
      rebuilt += c * FrameVector::geller(n, p.first, p.second);
    }
    rec.equal("Parseval identity", in, levi_pairing(v, v), s);
    rec.equal("tight frame reconstruction", in, v, rebuilt);
  }
  return rec;
}

// ---- variation --------------------------------------------------------------

void record_tensor(Recorder& rec, const std::string& in, const DeformationTensor& e) {
  const int n = e.dimension();
  HessianReport r = j_hessian(e);
  rec.equal("two Hessian routes agree", in, ExactScalar(r.total), j_hessian_via_T(e));
  rec.equal("mode norms sum to the norm", in, e.norm2(), r.norm2);
  if (n == 1) return;
  rec.equal("lowered form is symmetric", in, true, validate_symmetry(e));
  rec.equal("embeddable for dimensional reasons", in, true, r.embeddable && r.embeddable_by_dimension);
  if (!r.negative_modes && !e.is_zero()) {
    Rational bound = 4 * n * e.norm2();
    rec.record("admissible Hessian >= 4n |E|^2", in, ">=", text(bound), text(r.total), r.total >= bound);
    rec.record("admissible Hessian is positive", in, ">", "0", text(r.total), r.total > 0);
  }
}

Recorder variation_suite(int n, int degree) {
  Recorder rec;
  if (n == 1) {
    for (const auto& item : pool(1, degree)) {
      auto e = DeformationTensor::s3(item.value);
      record_tensor(rec, item.input, e);
      const int m = item.monomial.weight();
      HessianReport r = j_hessian(e);
      if (m <= -5) rec.record("mode sign law", item.input, "<", "0", text(r.total), r.total < 0);
      else if (m == -4) rec.record("mode sign law", item.input, "==", "0", text(r.total), r.total == 0);
      else rec.record("mode sign law", item.input, ">", "0", text(r.total), r.total > 0);
      rec.equal("embeddable iff no mode m <= -4", item.input, m > -4, r.embeddable);
    }
  } else {
    struct Job {
      std::string input;
      DeformationTensor e;
    };
    std::vector<Job> jobs;
    auto entries = pool(n, std::min(degree, 1));
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        for (const auto& item : entries) {
          AmbientTensor m(n);
          m.at(a, b) = m.at(b, a) = item.value;
          jobs.push_back({"M[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "] = " + item.input,
                          DeformationTensor::from_ambient(m)});
        }
    for (const auto& item : pool(n, std::min(degree, 3))) {
      if (item.monomial.anti_degree() != 0 || item.monomial.holo_degree() < 2) continue;
      AmbientTensor m(n);
      for (int a = 0; a <= n; ++a) m.at(a, a) = item.value;
      m.at(0, n) = m.at(n, 0) = item.value;
      jobs.push_back({"holomorphic M = " + item.input + " (diagonal and corner)", DeformationTensor::from_ambient(m)});
    }
    auto parts = parallel_map<Recorder>(jobs.size(), [&](std::size_t i) {
      Recorder r;
      record_tensor(r, jobs[i].input, jobs[i].e);
      return r;
    });
    for (auto& p : parts) rec.append(std::move(p));
  }

  std::set<std::string> seen;
  for (const auto& item : pool(n, std::min(degree, 4))) {
    for (const auto& [bd, comp] : harmonic_decompose(item.value).components) {
      if (bd == Bidegree{0, 0}) continue;
      for (const SpherePoly& v : {real_part(comp), imag_part(comp)}) {
        if (v.is_zero() || !seen.insert(v.to_string()).second) continue;
        std::string in = v.to_string() + " in H(" + std::to_string(bd.first) + "," + std::to_string(bd.second) + ")";
        Rational h = conformal_hessian(v);
        rec.record("conformal Hessian is non-negative", in, ">=", "0", text(h), h >= 0);
        bool linear = bd.first + bd.second == 1;
        rec.equal("conformal Hessian vanishes exactly on linear functions", in, linear, h == 0);
        ScalarSeries2 s = yamabe_energy_series(v);
        rec.equal("first conformal variation vanishes", in, ExactScalar(), s[1]);
        rec.equal("second order of the energy = Hessian / 2", in, ExactScalar(h / 2), s[2]);
      }
    }
  }
  return rec;
}

// ---- oracle3 ----------------------------------------------------------------

Recorder oracle3_suite(int n, int degree) {
  Recorder rec;
  if (n != 1) {
    rec.note("the brute-force oracle is defined on S^3; skipped for n = " + std::to_string(n));
    return rec;
  }
  std::string detail;
  bool base_ok = oracle3::verify_base_structure(&detail);
  rec.record("base structure from ambient calculus", "round S^3", "==", "frozen constants",
             base_ok ? "frozen constants" : detail, base_ok);
  oracle3::OracleRun round = oracle3::run(SpherePoly(1));
  rec.equal("round Webster curvature", "E = 0", SpherePoly(1, ExactScalar(round_webster_curvature(1))),
            round.webster[0]);
  rec.equal("Hessian constant fixed by E = 1", "E = 1", Rational(1), oracle3::hessian_constant());

  auto items = pool(1, degree);
  auto parts = parallel_map<Recorder>(items.size(), [&](std::size_t i) {
    Recorder r;
    const auto& item = items[i];
    oracle3::OracleRun run = oracle3::run(item.value);
    for (const auto& v : {oracle3::check_solver(run), oracle3::check_torsion_variation(run),
                          oracle3::check_connection_variation(run), oracle3::check_first_variation(run)})
      r.record(v.name, item.input, "==", "0", v.pass ? "0" : v.detail, v.pass);
    r.equal("criticality: order t of int W", item.input, ExactScalar(), run.integrated_webster[1]);
    auto sd = oracle3::second_derivative_check(run);
    r.equal("second derivative = C * mode total", item.input, Rational(sd.constant * sd.mode_total), sd.oracle);
    r.equal("second derivative = C * covariant route", item.input, ExactScalar(sd.constant) * sd.via_t,
            ExactScalar(sd.oracle));
    return r;
  });
  for (auto& p : parts) rec.append(std::move(p));
  return rec;
}

std::string timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

Json run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  std::vector<std::string> selected;
  for (const auto& s : known_suites())
    for (const auto& want : cfg.suites)
      if (want == "all" || want == s) {
        selected.push_back(s);
        break;
      }

  Json suites = Json::array();
  int cases = 0, failed = 0;
  for (const auto& name : selected) {
    Recorder rec;
    if (name == "ring") rec = ring_suite(cfg.dimension, cfg.degree);
    else if (name == "spectral") rec = spectral_suite(cfg.dimension, cfg.degree);
    else if (name == "frames") rec = frames_suite(cfg.dimension, cfg.degree);
    else if (name == "variation") rec = variation_suite(cfg.dimension, cfg.degree);
    else rec = oracle3_suite(cfg.dimension, cfg.degree);
    cases += rec.size();
    failed += rec.failed();
    suites.push_back(rec.finish(name));
  }

  Json report;
  report["tool"] = "crvar";
  report["version"] = kVersion;
  report["timestamp"] = timestamp();
  report["config"] = {{"dimension", cfg.dimension},
                      {"degree", cfg.degree},
                      {"suites", selected},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed},
                      {"output", cfg.output}};
  report["conventions"] = conventions(cfg.dimension);
  report["suites"] = suites;
  if (cfg.samples > 0) {
    Json mc = Json::array();
    int outside = 0;
    for (const auto& r : monte_carlo_integrals(cfg.dimension, cfg.degree, cfg.samples, cfg.seed)) {
      if (!r.within) ++outside;
      mc.push_back({{"monomial", r.monomial},
                    {"exact", r.exact},
                    {"estimate", {r.estimate_re, r.estimate_im}},
                    {"standard_error", r.standard_error},
                    {"within_3se", r.within}});
    }
    report["monte_carlo"] = {{"samples", cfg.samples}, {"seed", cfg.seed}, {"outside_3se", outside}, {"records", mc}};
  } else {
    report["monte_carlo"] = nullptr;
  }
  report["summary"] = {{"cases", cases}, {"failed", failed}, {"pass", failed == 0}};
  return report;
}

void print_summary(std::ostream& os, const Json& report) {
  const auto& cfg = report.at("config");
  os << "crvar " << report.at("version").get<std::string>() << "  n=" << cfg.at("dimension").get<int>()
     << " degree=" << cfg.at("degree").get<int>() << "\n";
  for (const auto& s : report.at("suites")) {
    int cases = s.at("cases").get<int>(), bad = s.at("failed").get<int>();
    os << "  " << std::left << std::setw(10) << s.at("name").get<std::string>() << (bad == 0 ? "pass" : "FAIL")
       << "  " << (cases - bad) << "/" << cases << "\n";
    for (const auto& note : s.at("notes")) os << "    note: " << note.get<std::string>() << "\n";
    int shown = 0;
    for (const auto& r : s.at("records")) {
      if (r.at("pass").get<bool>() || shown++ >= 5) continue;
      os << "    failed: " << r.at("check").get<std::string>() << " [" << r.at("input").get<std::string>()
         << "] expected " << r.at("relation").get<std::string>() << " " << r.at("expected").get<std::string>()
         << ", got " << r.at("actual").get<std::string>() << "\n";
    }
  }
  if (!report.at("monte_carlo").is_null()) {
    const auto& mc = report.at("monte_carlo");
    os << "  monte-carlo " << mc.at("records").size() << " integrals, " << mc.at("outside_3se").get<int>()
       << " outside 3 SE (" << mc.at("samples").get<long>() << " samples, informational)\n";
  }
  const auto& sum = report.at("summary");
  os << (sum.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << sum.at("cases").get<int>() << " exact cases, "
     << sum.at("failed").get<int>() << " failed\n";
}

}  // namespace crvar::app
