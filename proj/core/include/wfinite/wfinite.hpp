#pragma once

#include "wfinite/closed_form.hpp"
#include "wfinite/dissimilarity.hpp"
#include "wfinite/error.hpp"
#include "wfinite/features.hpp"
#include "wfinite/measure.hpp"
#include "wfinite/poisson.hpp"
#include "wfinite/random.hpp"
#include "wfinite/rate_function.hpp"
#include "wfinite/sliced.hpp"
#include "wfinite/statistics.hpp"
#include "wfinite/transport.hpp"
#include "wfinite/validation.hpp"
