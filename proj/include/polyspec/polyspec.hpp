#pragma once

#include "polyspec/core.hpp"
#include "polyspec/rng.hpp"
#include "polyspec/fourier.hpp"
#include "polyspec/noise.hpp"
#include "polyspec/influences.hpp"
#include "polyspec/families.hpp"
#include "polyspec/analysis.hpp"
#include "polyspec/audit.hpp"
#include "polyspec/config.hpp"
#include "polyspec/io.hpp"
#include "polyspec/sweep.hpp"
