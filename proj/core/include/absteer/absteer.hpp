#pragma once

#include "absteer/absolute.hpp"
#include "absteer/error.hpp"
#include "absteer/families.hpp"
#include "absteer/numlin.hpp"
#include "absteer/states.hpp"
#include "absteer/steering.hpp"
#include "absteer/telep_chsh.hpp"
#include "absteer/unitary.hpp"
#include "absteer/witness.hpp"
