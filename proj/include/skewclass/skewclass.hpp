#pragma once

#include "checked.hpp"
#include "expansion.hpp"
#include "factor.hpp"
#include "serialize.hpp"
#include "shapes.hpp"
#include "structure.hpp"
#include "tableaux.hpp"
#include "verify.hpp"
