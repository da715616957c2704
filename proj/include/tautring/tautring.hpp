#pragma once

// Umbrella header for the tautological-ring localization engine.

#include "tautring/bigint.hpp"
#include "tautring/char_class.hpp"
#include "tautring/class_parser.hpp"
#include "tautring/localization.hpp"
#include "tautring/manifold_io.hpp"
#include "tautring/manifolds.hpp"
#include "tautring/multipoly.hpp"
#include "tautring/rational.hpp"
#include "tautring/render.hpp"
#include "tautring/symmetric.hpp"
#include "tautring/taut_ring.hpp"
