// Umbrella header.
#pragma once

#include "toric/error.hpp"
#include "toric/lattice.hpp"
#include "toric/halfspace.hpp"
#include "toric/polytope.hpp"
#include "toric/gf2.hpp"
#include "toric/floer.hpp"
#include "toric/reduction.hpp"
#include "toric/certificate.hpp"
#include "toric/probes.hpp"
#include "toric/document.hpp"
#include "toric/svg.hpp"
#include "toric/corpus.hpp"
