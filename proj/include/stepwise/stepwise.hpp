#pragma once

#include "stepwise/bounds.hpp"
#include "stepwise/canonical.hpp"
#include "stepwise/constructions.hpp"
#include "stepwise/enumeration.hpp"
#include "stepwise/errors.hpp"
#include "stepwise/family_spec.hpp"
#include "stepwise/graph.hpp"
#include "stepwise/graph6.hpp"
#include "stepwise/ksi.hpp"
#include "stepwise/report.hpp"
#include "stepwise/survey.hpp"
#include "stepwise/text_formats.hpp"
