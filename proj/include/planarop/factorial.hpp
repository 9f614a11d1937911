#pragma once

#include <gmpxx.h>

namespace planarop {

/// m! as an exact integer. Values are memoized; safe to call concurrently.
const mpz_class& factorial(unsigned m);

}  // namespace planarop
