#pragma once

#include "annihilator.hpp"
#include "catalog.hpp"
#include "cayley.hpp"
#include "construct.hpp"
#include "core.hpp"
#include "element_parse.hpp"
#include "group.hpp"
#include "group_ring.hpp"
#include "hyperbolicity.hpp"
#include "isomorphism.hpp"
#include "lemma6.hpp"
#include "linalg.hpp"
#include "presentation.hpp"
#include "rank.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "special_units.hpp"
#include "table_io.hpp"
#include "todd_coxeter.hpp"
#include "units.hpp"
#include "verify.hpp"
