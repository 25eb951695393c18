#pragma once

#include "charp/error.hpp"
#include "charp/frobenius.hpp"
#include "charp/fsing.hpp"
#include "charp/groebner.hpp"
#include "charp/ideal.hpp"
#include "charp/ideal_ops.hpp"
#include "charp/monomial.hpp"
#include "charp/parser.hpp"
#include "charp/poly_ring.hpp"
#include "charp/polynomial.hpp"
#include "charp/prime_field.hpp"
#include "charp/tight_closure.hpp"
