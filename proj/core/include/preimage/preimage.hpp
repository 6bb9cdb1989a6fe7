/* preimage.hpp -- umbrella header */

#pragma once

#include "preimage/automaton.hpp"
#include "preimage/avoid.hpp"
#include "preimage/extend_search.hpp"
#include "preimage/gadgets.hpp"
#include "preimage/io.hpp"
#include "preimage/oracle.hpp"
#include "preimage/pair_analysis.hpp"
#include "preimage/rational_basis.hpp"
#include "preimage/resize.hpp"
#include "preimage/search.hpp"
#include "preimage/state_set.hpp"
#include "preimage/word.hpp"
