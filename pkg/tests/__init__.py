"""
cobweb-lab test package
"""
