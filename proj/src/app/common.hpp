#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "crvar/app.hpp"
#include "crvar/frames.hpp"
#include "crvar/poly.hpp"

namespace crvar::app::detail {

inline std::string text(const Rational& r) { return rational_to_string(r); }
inline std::string text(const ExactScalar& s) { return s.to_string(); }
inline std::string text(const SpherePoly& p) { return p.to_string(); }
inline std::string text(bool b) { return b ? "true" : "false"; }
std::string text(const FrameVector& v);

/// Per-case records of one suite, in submission order.
class Recorder {
 public:
  void record(const std::string& check, const std::string& input, const std::string& relation,
              const std::string& expected, const std::string& actual, bool pass);

  template <typename T>
  void equal(const std::string& check, const std::string& input, const T& expected, const T& actual) {
    record(check, input, "==", text(expected), text(actual), expected == actual);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  void append(Recorder&& other);

  int failed() const { return failed_; }
  int size() const { return static_cast<int>(records_.size()); }
  Json finish(const std::string& name) const;

 private:
  Json records_ = Json::array();
  std::vector<std::string> notes_;
  int failed_ = 0;
};

/// Runs f(i) for i in [0, count) on worker threads; results keep index order.
template <typename R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& f) {
  std::vector<R> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// (1/2) sum_{j<k} (Z_jk Zbar_jk + Zbar_jk Z_jk) f
SpherePoly frame_sublaplacian(const SpherePoly& f);
SpherePoly real_part(const SpherePoly& f);
SpherePoly imag_part(const SpherePoly& f);
std::string pair_label(const GellerPair& p);

}  // namespace crvar::app::detail
