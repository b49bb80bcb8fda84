#pragma once

#include "vknot/census.hpp"
#include "vknot/diagram.hpp"
#include "vknot/errors.hpp"
#include "vknot/flat.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariant.hpp"
#include "vknot/laurent.hpp"
#include "vknot/moves.hpp"
#include "vknot/version.hpp"
