"""
Controllers package - command-line front end
"""
