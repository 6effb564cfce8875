#ifndef MOTZKIN_MOTZKIN_HPP
#define MOTZKIN_MOTZKIN_HPP

// Umbrella header for the whole library.

#include "motzkin/integer.hpp"
#include "motzkin/polynomial.hpp"
#include "motzkin/series.hpp"
#include "motzkin/trinomial.hpp"
#include "motzkin/motzkin_numbers.hpp"
#include "motzkin/path.hpp"
#include "motzkin/bounded_dp.hpp"
#include "motzkin/determinant.hpp"
#include "motzkin/closed_form.hpp"
#include "motzkin/statistics.hpp"
#include "motzkin/verify.hpp"

#endif // MOTZKIN_MOTZKIN_HPP
