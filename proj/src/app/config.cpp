#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "crvar/app.hpp"

namespace crvar::app {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_integer(const std::string& v, int line, int col) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ParseError("expected an integer, got '" + v + "'", line, col);
  return out;
}

}  // namespace

std::vector<std::string> known_suites() { return {"ring", "spectral", "frames", "variation", "oracle3"}; }

SuiteConfig parse_config(std::string_view text, SuiteConfig cfg) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view body(raw);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    if (trim(body).empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line, 1);
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    int vcol = static_cast<int>(eq) + 2 + static_cast<int>(body.substr(eq + 1).find_first_not_of(" \t"));
    if (value.empty()) throw ParseError("missing value for '" + key + "'", line, vcol);
    if (key == "dimension" || key == "n") {
      cfg.dimension = parse_integer<int>(value, line, vcol);
    } else if (key == "degree") {
      cfg.degree = parse_integer<int>(value, line, vcol);
    } else if (key == "samples") {
      cfg.samples = parse_integer<long>(value, line, vcol);
    } else if (key == "seed") {
      cfg.seed = parse_integer<std::uint64_t>(value, line, vcol);
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "suites") {
      cfg.suites.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) cfg.suites.push_back(item);
      }
    } else {
      throw ParseError("unknown key '" + key + "'", line, 1);
    }
  }
  return cfg;
}

SuiteConfig load_config(const std::string& path, SuiteConfig base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

void validate(const SuiteConfig& cfg) {
  if (cfg.degree < 1) throw Error("degree must be at least 1");
  if (cfg.samples < 0) throw Error("samples must be non-negative");
  if (cfg.dimension < 1) throw Error("dimension must be at least 1");
  if (cfg.dimension > 3)
    throw Error("dimension " + std::to_string(cfg.dimension) + " is not supported by the pool suites (n <= 3)");
  if (cfg.suites.empty()) throw Error("no suites selected");
  auto known = known_suites();
  for (const auto& s : cfg.suites)
    if (s != "all" && std::find(known.begin(), known.end(), s) == known.end())
      throw Error("unknown suite '" + s + "'");
}

}  // namespace crvar::app
