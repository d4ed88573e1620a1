#pragma once

#include "reesgor/corpus.hpp"
#include "reesgor/decision.hpp"
#include "reesgor/error.hpp"
#include "reesgor/field.hpp"
#include "reesgor/groebner.hpp"
#include "reesgor/hilbert.hpp"
#include "reesgor/ideal.hpp"
#include "reesgor/invariants.hpp"
#include "reesgor/io.hpp"
#include "reesgor/module.hpp"
#include "reesgor/parse.hpp"
#include "reesgor/polynomial.hpp"
#include "reesgor/rees_oracle.hpp"
#include "reesgor/s2.hpp"
