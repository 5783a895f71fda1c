#ifndef LIEREP_LIEREP_HPP
#define LIEREP_LIEREP_HPP

#include "lierep/rational.hpp"
#include "lierep/matrix.hpp"
#include "lierep/polynomial.hpp"
#include "lierep/root_system.hpp"
#include "lierep/chevalley.hpp"
#include "lierep/enveloping.hpp"
#include "lierep/modules.hpp"
#include "lierep/deformation.hpp"
#include "lierep/criteria.hpp"
#include "lierep/reflection.hpp"
#include "lierep/json.hpp"

#endif // LIEREP_LIEREP_HPP
