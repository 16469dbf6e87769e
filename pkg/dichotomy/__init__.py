"""Classification and cross-validation package"""
