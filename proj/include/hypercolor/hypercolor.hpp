#pragma once

#include "coloring.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "lemma.hpp"
#include "oracle.hpp"
#include "setfam.hpp"
#include "theorem.hpp"
#include "vertex_mask.hpp"
