#pragma once

#include "commands.hpp"
#include "decision.hpp"
#include "element.hpp"
#include "error.hpp"
#include "group.hpp"
#include "instance.hpp"
#include "literal.hpp"
#include "nested.hpp"
#include "oracle.hpp"
#include "qset.hpp"
#include "sampling.hpp"
#include "tristate.hpp"
#include "witness.hpp"
#include "wreath.hpp"
