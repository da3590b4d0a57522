#pragma once

#include "autgroup/alphabet.hpp"
#include "autgroup/automaton_io.hpp"
#include "autgroup/decide.hpp"
#include "autgroup/error.hpp"
#include "autgroup/ev_periodic.hpp"
#include "autgroup/json_io.hpp"
#include "autgroup/mealy.hpp"
#include "autgroup/oracle.hpp"
#include "autgroup/partitions.hpp"
#include "autgroup/recognizer.hpp"
#include "autgroup/structure.hpp"
