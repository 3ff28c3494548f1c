"""
Services package - susceptibility, propagation, gate, oracle and search
"""
