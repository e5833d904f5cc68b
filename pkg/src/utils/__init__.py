"""
Utility functions for the Egonet Paradox toolkit
"""

from .data_loader import (
    load_dyad_csv,
    save_dyad_csv,
    load_degree_histogram,
    write_edge_list,
    read_edge_list,
    write_table,
    load_table,
    write_manifest,
    read_manifest,
)
from .helpers import (
    print_header,
    print_section,
    format_percentage,
    format_number,
    derive_rng,
    parallel_map,
    sha256_file,
)

__all__ = [
    'load_dyad_csv', 'save_dyad_csv', 'load_degree_histogram', 'write_edge_list',
    'read_edge_list', 'write_table', 'load_table', 'write_manifest', 'read_manifest',
    'print_header', 'print_section', 'format_percentage', 'format_number',
    'derive_rng', 'parallel_map', 'sha256_file',
]
