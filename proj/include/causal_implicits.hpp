#pragma once

#include "causal_implicits/errors.hpp"
#include "causal_implicits/rational.hpp"
#include "causal_implicits/model.hpp"
#include "causal_implicits/params.hpp"
#include "causal_implicits/polynomial.hpp"
#include "causal_implicits/groebner.hpp"
#include "causal_implicits/ideal.hpp"
#include "causal_implicits/parameterize.hpp"
#include "causal_implicits/kernel.hpp"
#include "causal_implicits/reduce.hpp"
#include "causal_implicits/verify.hpp"
#include "causal_implicits/serialization.hpp"
