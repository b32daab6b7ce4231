#pragma once

#include "bicyclic/compact.hpp"
#include "bicyclic/core.hpp"
#include "bicyclic/discreteness.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/report.hpp"
#include "bicyclic/serialize.hpp"
#include "bicyclic/topology.hpp"
