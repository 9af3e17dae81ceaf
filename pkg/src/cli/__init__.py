"""
Командная строка: грамматика выражений, аргументы-подмножества, экспорт окон, отчёты
"""
from .grammar import names_in, parse_morphism, print_morphism, tokenize
from .spec_args import parse_spec
from .export import window_from_json, window_to_dict, window_to_dot, window_to_json
from .report import RunReport
from .commands import build_parser, main

__all__ = [
    "names_in", "parse_morphism", "print_morphism", "tokenize",
    "parse_spec",
    "window_from_json", "window_to_dict", "window_to_dot", "window_to_json",
    "RunReport",
    "build_parser", "main",
]
