#pragma once

#include "kneser/constructions.hpp"
#include "kneser/core.hpp"
#include "kneser/detnum.hpp"
#include "kneser/enumeration.hpp"
#include "kneser/errors.hpp"
#include "kneser/oracle.hpp"
#include "kneser/verifier.hpp"
