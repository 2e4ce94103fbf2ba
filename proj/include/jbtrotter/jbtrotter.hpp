#pragma once

#include "jbtrotter/axioms.hpp"
#include "jbtrotter/dense.hpp"
#include "jbtrotter/element.hpp"
#include "jbtrotter/error.hpp"
#include "jbtrotter/io.hpp"
#include "jbtrotter/jets.hpp"
#include "jbtrotter/octonion.hpp"
#include "jbtrotter/planner.hpp"
#include "jbtrotter/random.hpp"
#include "jbtrotter/spectral.hpp"
#include "jbtrotter/trotter.hpp"
