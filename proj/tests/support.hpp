#pragma once

#include "sal/model.hpp"
#include "sal/parser.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace support {

inline std::string model_path( const std::string& name )
{
    return std::string( SALKIT_MODELS_DIR ) + "/" + name;
}

inline std::string read_file( const std::string& path )
{
    std::ifstream in( path );
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline sal::StratifiedModel illustrative()
{
    return sal::parse_model( read_file( model_path( "illustrative.salm" ) ) );
}

} // namespace support
