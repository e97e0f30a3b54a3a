#pragma once

#include "minppr/algebra.hpp"
#include "minppr/constructions.hpp"
#include "minppr/error.hpp"
#include "minppr/graph.hpp"
#include "minppr/harness.hpp"
#include "minppr/io.hpp"
#include "minppr/metrics.hpp"
#include "minppr/rank.hpp"
#include "minppr/spam.hpp"
