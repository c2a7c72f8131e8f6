#pragma once

#include "zsep/model.hpp"
#include "zsep/radio.hpp"
#include "zsep/deployment.hpp"
#include "zsep/election.hpp"
#include "zsep/protocols.hpp"
#include "zsep/simulator.hpp"
#include "zsep/report.hpp"
