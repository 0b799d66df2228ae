#pragma once

#include "errors.hpp"
#include "relation.hpp"
#include "preference.hpp"
#include "structure.hpp"
#include "chain.hpp"
#include "lattice.hpp"
#include "oracle.hpp"
#include "compstat.hpp"
#include "ambiguity.hpp"
#include "social_choice.hpp"
#include "fixtures.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "sweeps.hpp"
