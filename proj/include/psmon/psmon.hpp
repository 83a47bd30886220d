// psmon.hpp -- umbrella header for the patience-sorting monoid library.

#pragma once

#include "psmon/automatic.hpp"
#include "psmon/instrumentation.hpp"
#include "psmon/io.hpp"
#include "psmon/left_insertion.hpp"
#include "psmon/monoid.hpp"
#include "psmon/nfa.hpp"
#include "psmon/presentation.hpp"
#include "psmon/subsequences.hpp"
#include "psmon/tableau.hpp"
#include "psmon/transducer.hpp"
#include "psmon/words.hpp"
