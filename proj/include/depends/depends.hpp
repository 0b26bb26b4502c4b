#pragma once

#include "depends/errors.hpp"
#include "depends/model.hpp"
#include "depends/relations.hpp"
#include "depends/ast.hpp"
#include "depends/kotlin_parser.hpp"
#include "depends/java_parser.hpp"
#include "depends/entity_builder.hpp"
#include "depends/registry.hpp"
#include "depends/frontends.hpp"
#include "depends/resolver.hpp"
#include "depends/pipeline.hpp"
#include "depends/emitter.hpp"
#include "depends/harness.hpp"
#include "depends/cli.hpp"
