#pragma once

#include "oplin/config.hpp"
#include "oplin/errors.hpp"
#include "oplin/oracle.hpp"
#include "oplin/paths.hpp"
#include "oplin/polynomial.hpp"
#include "oplin/positivity.hpp"
#include "oplin/rational.hpp"
#include "oplin/recurrence.hpp"
#include "oplin/scalar.hpp"
#include "oplin/sequence.hpp"
#include "oplin/weights.hpp"
