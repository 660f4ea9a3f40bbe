#pragma once

// Algebraic geometry over finite groups: equations, algebraic sets,
// Zariski closures, coordinate groups, and the CSA/CSN_k structure
// theory, with verification suites over a built-in corpus.

#include "grpgeo/bitset.hpp"
#include "grpgeo/config.hpp"
#include "grpgeo/coordinate.hpp"
#include "grpgeo/corpus.hpp"
#include "grpgeo/error.hpp"
#include "grpgeo/formats.hpp"
#include "grpgeo/group.hpp"
#include "grpgeo/parse.hpp"
#include "grpgeo/properties.hpp"
#include "grpgeo/report.hpp"
#include "grpgeo/subgroup.hpp"
#include "grpgeo/verify.hpp"
#include "grpgeo/word.hpp"
#include "grpgeo/zariski.hpp"
