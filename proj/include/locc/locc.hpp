#pragma once

#include "locc/entanglement.hpp"
#include "locc/errors.hpp"
#include "locc/majorization.hpp"
#include "locc/numeric.hpp"
#include "locc/oracle.hpp"
#include "locc/propositions.hpp"
#include "locc/states.hpp"
