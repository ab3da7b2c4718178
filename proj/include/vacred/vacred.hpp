#pragma once

// Umbrella header.

#include "vacred/af.hpp"
#include "vacred/claims.hpp"
#include "vacred/enumeration.hpp"
#include "vacred/formats.hpp"
#include "vacred/principles.hpp"
#include "vacred/semantics.hpp"
#include "vacred/vacuous.hpp"
