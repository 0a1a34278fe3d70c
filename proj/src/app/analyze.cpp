#include <fstream>
#include <sstream>

#include "common.hpp"
#include "crvar/oracle3.hpp"
#include "crvar/spectral.hpp"
#include "crvar/variation.hpp"

namespace crvar::app {

using namespace detail;

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

// Splits off `count` leading whitespace-separated tokens; `rest` is the column
// (0-based) where the remainder starts.
std::vector<Token> leading_tokens(const std::string& line, int count, std::size_t& rest) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (static_cast<int>(out.size()) < count) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string::npos) break;
    std::size_t end = line.find_first_of(" \t\r", pos);
    if (end == std::string::npos) end = line.size();
    out.push_back({line.substr(pos, end - pos), static_cast<int>(pos) + 1});
    pos = end;
  }
  rest = pos;
  return out;
}

int index_token(const Token& t, int n, int line) {
  int v = 0;
  std::istringstream in(t.text);
  if (!(in >> v) || !in.eof()) throw ParseError("expected an index, got '" + t.text + "'", line, t.column);
  if (v < 1 || v > n + 1)
    throw ParseError("index " + t.text + " out of range 1.." + std::to_string(n + 1), line, t.column);
  return v - 1;
}

}  // namespace

DeformationTensor parse_deformation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0, n = 0;
  enum class Kind { None, Scalar, Raw, Ambient } kind = Kind::None;
  SpherePoly scalar;
  TensorField rawc;
  AmbientTensor ambient(1);
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::size_t rest = 0;
    auto head = leading_tokens(raw, 1, rest);
    if (head.empty()) continue;
    const Token& key = head[0];
    if (key.text == "dimension") {
      if (n != 0) throw ParseError("duplicate dimension header", line, key.column);
      auto toks = leading_tokens(raw, 3, rest);
      if (toks.size() != 2) throw ParseError("expected 'dimension <n>'", line, key.column);
      std::istringstream v(toks[1].text);
      if (!(v >> n) || !v.eof() || n < 1 || n > kMaxVars - 1)
        throw ParseError("invalid dimension '" + toks[1].text + "'", line, toks[1].column);
      scalar = SpherePoly(n);
      rawc = TensorField(n);
      ambient = AmbientTensor(n);
      continue;
    }
    if (n == 0) throw ParseError("missing 'dimension <n>' header before coefficients", line, key.column);
    Kind k;
    int nidx;
    if (key.text == "E") {
      k = Kind::Scalar;
      nidx = 0;
      if (n != 1) throw ParseError("'E' lines need dimension 1; use 'c' or 'm' lines", line, key.column);
    } else if (key.text == "c") {
      k = Kind::Raw;
      nidx = 4;
    } else if (key.text == "m") {
      k = Kind::Ambient;
      nidx = 2;
    } else {
      throw ParseError("unknown directive '" + key.text + "'", line, key.column);
    }
    if (kind != Kind::None && kind != k) throw ParseError("cannot mix coefficient kinds", line, key.column);
    kind = k;
    auto toks = leading_tokens(raw, 1 + nidx, rest);
    if (static_cast<int>(toks.size()) != 1 + nidx)
      throw ParseError("expected " + std::to_string(nidx) + " indices after '" + key.text + "'", line, key.column);
    std::vector<int> idx;
    for (int i = 1; i <= nidx; ++i) idx.push_back(index_token(toks[i], n, line));
    if (rest >= raw.size() || raw.find_first_not_of(" \t\r", rest) == std::string::npos)
      throw ParseError("missing polynomial", line, static_cast<int>(raw.size()) + 1);
    SpherePoly value = normal_form(parse_poly(n, std::string_view(raw).substr(rest), line, static_cast<int>(rest)));
    if (k == Kind::Scalar) {
      scalar += value;
    } else if (k == Kind::Raw) {
      if (idx[0] >= idx[1] || idx[2] >= idx[3])
        throw ParseError("frame pair indices must satisfy j < k and l < m", line, toks[1].column);
      GellerPair bar{idx[0], idx[1]}, form{idx[2], idx[3]};
      rawc.set(bar, form, rawc.coefficient(bar, form) + value);
    } else {
      ambient.at(idx[0], idx[1]) += value;
    }
  }
  if (n == 0) throw ParseError("empty deformation file: missing 'dimension <n>'", line + 1, 1);
  switch (kind) {
    case Kind::Scalar: return DeformationTensor::s3(scalar);
    case Kind::Raw: return DeformationTensor::from_raw(rawc);
    case Kind::Ambient: return DeformationTensor::from_ambient(ambient);
    case Kind::None: break;
  }
  return n == 1 ? DeformationTensor::s3(SpherePoly(1)) : DeformationTensor(n);
}

DeformationTensor load_deformation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read deformation file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_deformation(buf.str());
}

Json analyze_deformation(const DeformationTensor& e, const AnalyzeOptions& opt) {
  const int n = e.dimension();
  auto sym = check_symmetry(e);
  if (!sym.symmetric) {
    auto [a, b] = *sym.offending;
    throw SymmetryError("deformation tensor is not symmetric: E(Z" + pair_label(a) + ", Z" + pair_label(b) +
                            ") != E(Z" + pair_label(b) + ", Z" + pair_label(a) + ")",
                        a, b);
  }
  Json out;
  out["dimension"] = n;
  Json coeffs = Json::array();
  for (const auto& [key, c] : e.coefficients().coefficients())
    coeffs.push_back({{"bar", "Zb" + pair_label(key.first)}, {"form", "theta" + pair_label(key.second)},
                      {"value", c.to_string()}});
  out["coefficients"] = coeffs;
  out["symmetric"] = true;

  HessianReport r = j_hessian(e);
  Json modes = Json::array();
  for (const auto& t : r.modes)
    modes.push_back({{"m", t.m}, {"norm2", text(t.norm2)}, {"weighted", text(t.weighted)}});
  out["modes"] = modes;
  out["norm2"] = text(r.norm2);
  out["total"] = text(r.total);
  VolumeFactor pf = normalized_functional_prefactor(n);
  out["prefactor"] = pf.to_string();
  out["total_with_prefactor"] = text(r.total) + " * " + pf.to_string();
  ExactScalar via = j_hessian_via_T(e);
  out["via_T"] = text(via);
  bool pass = via == ExactScalar(r.total);
  out["two_route_equal"] = pass;
  out["embeddable"] = r.embeddable;
  if (n == 1) {
    bool low = false;
    for (const auto& t : r.modes) low = low || t.m <= -4;
    out["embeddable_reason"] = low ? "nonzero Fourier mode with m <= -4" : "no Fourier mode with m <= -4";
  } else {
    out["embeddable_reason"] = "dimension >= 5: always embeddable";
    out["negative_modes"] = r.negative_modes;
  }
  if (opt.oracle) {
    if (n != 1) {
      out["oracle"] = {{"skipped", "the brute-force oracle is defined on S^3 only"}};
    } else {
      oracle3::OracleRun run = oracle3::run(e.scalar());
      Json checks = Json::array();
      bool ok = true;
      for (const auto& v : {oracle3::check_solver(run), oracle3::check_torsion_variation(run),
                            oracle3::check_connection_variation(run), oracle3::check_first_variation(run)}) {
        checks.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
        ok = ok && v.pass;
      }
      auto sd = oracle3::second_derivative_check(run);
      ok = ok && sd.pass;
      out["oracle"] = {{"checks", checks},
                       {"integrated_webster", {text(run.integrated_webster[0]), text(run.integrated_webster[1]),
                                               text(run.integrated_webster[2])}},
                       {"second_derivative", text(sd.oracle)},
                       {"expected", text(sd.constant * sd.mode_total)},
                       {"constant", text(sd.constant)},
                       {"pass", ok}};
      pass = pass && ok;
    }
  }
  out["pass"] = pass;
  return out;
}

Json spectrum(int n, int max_degree) {
  if (n < 1 || n > kMaxVars - 1) throw Error("spectrum: unsupported dimension");
  if (max_degree < 1) throw Error("spectrum: degree must be at least 1");
  Json rows = Json::array();
  bool pass = true;
  for (int d = 0; d <= max_degree; ++d) {
    for (int p = d; p >= 0; --p) {
      const int q = d - p;
      Monomial m{};
      m.z(0) = static_cast<std::uint8_t>(p);
      m.zbar(1) = static_cast<std::uint8_t>(q);
      Poly h = Poly::monomial(n, m);
      SpherePoly f = normal_form(h);
      Rational lambda = eigenvalue(p, q, n);
      SpherePoly expected = f * ExactScalar(-lambda);
      bool spectral_ok = sublaplacian(f) == expected && harmonic_decompose(f).components.size() == 1;
      bool frame_ok = frame_sublaplacian(f) == expected;
      // kappa lambda - n >= 0 with equality exactly on H(1,0) + H(0,1)
      Rational gap = kEnergyCalibration * lambda - n;
      bool kernel_ok = d == 0 ? lambda == 0 : (gap >= 0 && (gap == 0) == (d == 1));
      pass = pass && spectral_ok && frame_ok && kernel_ok;
      rows.push_back({{"p", p},
                      {"q", q},
                      {"lambda", text(lambda)},
                      {"representative", h.to_string()},
                      {"gap", text(gap)},
                      {"spectral", spectral_ok},
                      {"frame", frame_ok},
                      {"kernel", kernel_ok}});
    }
  }
  return {{"dimension", n}, {"rows", rows}, {"pass", pass}};
}

Json conventions(int n) {
  Rational w0 = round_webster_curvature(n);
  const auto& base = oracle3::base_structure();
  oracle3::OracleRun round = oracle3::run(SpherePoly(1));
  return {
      {"dimension", n},
      {"contact_form", "theta = i sum_j (z_j dzbar_j - zbar_j dz_j) = 2 theta_0"},
      {"reeb_field", "T = (i/2) sum_j (z_j d/dz_j - zbar_j d/dzbar_j)"},
      {"levi_pairing", "L(V, W) = -(i/2) d theta(V, Wbar) = sum_j v_j conj(w_j)"},
      {"measure", "rotation-invariant probability measure on S^{2n+1}"},
      {"volume", normalized_functional_prefactor(n).volume_text()},
      {"prefactor", normalized_functional_prefactor(n).to_string()},
      {"eigenvalue", "lambda_{p,q,n} = pq + n(p+q)/2"},
      {"kappa", std::to_string(kEnergyCalibration)},
      {"b_n", text(cr_yamabe_constant(n))},
      {"Q", homogeneous_dimension(n)},
      {"webster_round", text(w0)},
      {"webster_round_formula", "n(n+1)/2 for theta, n(n+1) for theta_0 = theta/2"},
      {"webster_round_oracle_s3", text(round.webster[0].constant_term())},
      {"hessian_constant_C", text(oracle3::hessian_constant())},
      {"levi_constant_h", text(base.levi)},
      {"connection_w", text(base.connection)},
      {"deformation", "Jdot = 2E; S^3 path Z1(t) = Z1 - i t E Z1bar + O(t^2), E = E_1^{1bar}"},
      {"reeb_weight", "T f = i (m/2) f on weight m; nabla_T E = i (m/2 + 2) E"},
      {"torsion_rate", "Adot = -(2 + m/2) conj(E) on a weight-m mode"},
      {"base_frame_s3", "Z1 = zbar2 d/dz1 - zbar1 d/dz2 = -Z12, theta^1 = -theta12"},
  };
}

}  // namespace crvar::app
