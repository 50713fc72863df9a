def f_gold ( grid ) :
    total = 0
    for row in grid :
        for cell in row :
            total += cell
    return total


if __name__ == '__main__' :
    print ( f_gold ( [ [ 1 , 2 ] , [ 3 , 4 ] ] ) )
    print ( f_gold ( [ [ 0 , 0 , 0 ] ] ) )
