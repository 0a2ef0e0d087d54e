#pragma once

#include "partalg/errors.hpp"
#include "partalg/exactratio.hpp"
#include "partalg/seatplan.hpp"
#include "partalg/word.hpp"
#include "partalg/relations.hpp"
#include "partalg/report.hpp"
#include "partalg/algebra.hpp"
#include "partalg/standardform.hpp"
#include "partalg/bratteli.hpp"
#include "partalg/matrix.hpp"
#include "partalg/seminormal.hpp"
