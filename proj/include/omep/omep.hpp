#pragma once

// umbrella header

#include "omep/rational.hpp"
#include "omep/matrix.hpp"
#include "omep/galois.hpp"
#include "omep/plan.hpp"
#include "omep/constructions.hpp"
#include "omep/verification.hpp"
#include "omep/io.hpp"
