#pragma once

#include "slmn/rational.hpp"
#include "slmn/errors.hpp"
#include "slmn/weight.hpp"
#include "slmn/algebra_core.hpp"
#include "slmn/weights.hpp"
#include "slmn/composition.hpp"
#include "slmn/linalg.hpp"
#include "slmn/shapovalov.hpp"
#include "slmn/dirac.hpp"
