#include "planarop/factorial.hpp"

#include <deque>
#include <mutex>

namespace planarop {

namespace {

// Append-only; std::deque keeps references to earlier elements valid.
struct FactorialMemo {
  std::mutex mutex;
  std::deque<mpz_class> values{mpz_class(1)};
};

FactorialMemo& memo() {
  static FactorialMemo instance;
  return instance;
}

}  // namespace

const mpz_class& factorial(unsigned m) {
  auto& f = memo();
  std::lock_guard lock(f.mutex);
  while (f.values.size() <= m) {
    mpz_class next = f.values.back() * static_cast<unsigned long>(f.values.size());
    f.values.push_back(std::move(next));
  }
  return f.values[m];
}

}  // namespace planarop
