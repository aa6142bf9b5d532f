// tropitac/tropitac.hpp - everything
#pragma once

#include "cases.hpp"
#include "catalog.hpp"
#include "classify.hpp"
#include "corpus.hpp"
#include "elimination.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "refine.hpp"
#include "singularity.hpp"
#include "svg.hpp"
#include "tropical.hpp"
