"""
otm-thermo - guessed quantum heat and work under one-time energy measurements
"""
